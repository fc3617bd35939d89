#pragma once

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace mspotty {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k) with the usual convention C(n, k) = 0 for k < 0 or k > n.
BigInt binomial(int64_t n, int64_t k);

// n! for small n.
BigInt factorial(uint32_t n);

BigInt ipow(const BigInt& base, uint64_t exp);

// ceil(a / t) for nonnegative a and positive t.
inline uint64_t ceil_div(uint64_t a, uint64_t t) { return (a + t - 1) / t; }

}  // namespace mspotty
