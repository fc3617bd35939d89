#pragma once

#include <stdexcept>
#include <string>

namespace mspotty {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid ring or code parameters (non-prime modulus, k out of range, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Arguments outside the declared domain (element index out of range,
// mismatched vector lengths, ...).
struct DomainError : Error {
    using Error::Error;
};

// Operation not defined for this ring family (Gray map outside R_k, ...).
struct UnsupportedError : Error {
    using Error::Error;
};

// A division that the transforms require to be exact was not.
struct IntegralityError : Error {
    using Error::Error;
};

// Malformed element literal, code spec file or polynomial text.
struct ParseError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured budget. `required` carries the
// number of vectors (or pairs) the enumeration would have to visit.
struct BudgetError : Error {
    BudgetError(const std::string& msg, std::string required_count)
        : Error(msg), required(std::move(required_count)) {}
    std::string required;
};

}  // namespace mspotty
