#include "mspotty/bigint.hpp"

namespace mspotty {

BigInt binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int64_t i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

BigInt factorial(uint32_t n) {
    BigInt r = 1;
    for (uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt ipow(const BigInt& base, uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace mspotty
