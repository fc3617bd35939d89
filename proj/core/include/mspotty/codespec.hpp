#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "mspotty/code.hpp"
#include "mspotty/ring.hpp"

namespace mspotty {

// Parsed form of the line-oriented code spec format:
//
//   ring <family> <params...>     # zmod / gf / chain / rk
//   bytes b=<b> n=<n>
//   gen <elem> <elem> ...         # one line per generator, n*b literals
//   gen2 <elem> ...               # generators of an optional second code
//
// Blank lines and '#' comments are ignored.
struct CodeSpecFile {
    std::shared_ptr<const Ring> ring;
    uint32_t b = 0;
    uint32_t n = 0;
    std::vector<std::vector<Elem>> generators;
    std::vector<std::vector<Elem>> generators2;

    bool has_second() const { return !generators2.empty(); }

    LinearCode first_code(uint64_t budget = kDefaultBudget) const;
    LinearCode second_code(uint64_t budget = kDefaultBudget) const;
};

CodeSpecFile parse_code_spec(std::istream& in);
CodeSpecFile parse_code_spec_text(const std::string& text);
CodeSpecFile parse_code_spec_file(const std::string& path);

}  // namespace mspotty
