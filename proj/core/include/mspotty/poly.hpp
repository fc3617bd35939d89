#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mspotty/bigint.hpp"

namespace mspotty {

// Variable universe: z, x, y and the indexed families x_i, y_i (i >= 1).
// Codes order the variables as the sequence z, x, y, x_1, y_1, x_2, y_2, ...
struct Var {
    uint32_t code = 0;

    static Var z() { return {0}; }
    static Var x() { return {1}; }
    static Var y() { return {2}; }
    static Var xi(uint32_t i) { return {2 * i + 1}; }  // i >= 1
    static Var yi(uint32_t i) { return {2 * i + 2}; }

    std::string name() const;
    static std::optional<Var> parse(std::string_view name);

    auto operator<=>(const Var&) const = default;
};

// Sorted (variable, positive exponent) pairs.
using Monomial = std::vector<std::pair<Var, uint32_t>>;

uint64_t total_degree(const Monomial& m);

// Canonical term order: ascending total degree; ties broken along the
// variable sequence, higher exponent on the earlier variable first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact integer coefficients. No zero
// coefficient is ever stored; iteration follows the canonical term order, so
// printing is byte-stable.
class MultiPoly {
  public:
    MultiPoly() = default;
    static MultiPoly constant(BigInt c);
    static MultiPoly variable(Var v, uint32_t exp = 1);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    uint64_t degree() const;  // 0 for the zero polynomial
    BigInt coeff(const Monomial& m) const;

    void add_term(Monomial m, BigInt c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scaled(const BigInt& c) const;
    // Divide every coefficient by d; IntegralityError if any division is inexact.
    MultiPoly divided_exact(const BigInt& d) const;

    // Substitute integers and/or variables for variables. Variables missing
    // from the assignment are kept.
    using Subst = std::map<Var, std::variant<BigInt, Var>>;
    MultiPoly evaluate(const Subst& assignment) const;

    // Sum of all coefficients = value with every variable set to 1.
    BigInt value_at_ones() const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    const std::map<Monomial, BigInt, MonomialOrder>& terms() const { return terms_; }

    // Text format: terms joined by " + " / " - " in canonical order,
    // coefficient 1 omitted, exponent 1 omitted, e.g. "1 + 3 z - z^2".
    std::string to_text() const;
    static MultiPoly parse_text(std::string_view text);

    // JSON format: [{"coeff": "<decimal>", "exps": {"z": 2, ...}}, ...]
    std::string to_json_string() const;
    static MultiPoly from_json_string(std::string_view json);

  private:
    std::map<Monomial, BigInt, MonomialOrder> terms_;
};

}  // namespace mspotty
