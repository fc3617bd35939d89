#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mspotty/bigint.hpp"

namespace mspotty {

// Coefficients of the m-th cyclotomic polynomial, ascending degree, computed
// by dividing x^m - 1 by the cyclotomic polynomials of the proper divisors of
// m. Results are cached; safe to call concurrently.
std::vector<BigInt> cyclotomic_polynomial(uint32_t m);

// An exact integer combination of m-th roots of unity: counts[e] copies of
// zeta_m^e. Two sums are equal iff their count polynomials agree modulo the
// m-th cyclotomic polynomial.
class CyclotomicSum {
  public:
    explicit CyclotomicSum(uint32_t order);

    uint32_t order() const { return m_; }

    // counts[exponent] += weight. Requires exponent < order.
    void accumulate(uint32_t exponent, int64_t weight);

    const std::vector<int64_t>& counts() const { return counts_; }

    // Canonical remainder modulo the m-th cyclotomic polynomial.
    std::vector<BigInt> reduced() const;

    // The value of the sum if it lies in Z, i.e. the remainder is constant.
    std::optional<BigInt> as_integer() const;

    bool is_zero() const;
    bool operator==(const CyclotomicSum& other) const;
    bool operator!=(const CyclotomicSum& other) const { return !(*this == other); }

  private:
    uint32_t m_;
    std::vector<int64_t> counts_;
};

}  // namespace mspotty
