#include "mspotty/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "mspotty/errors.hpp"

namespace mspotty {

namespace {

// Exact division of integer polynomials, quotient only. `den` must be monic
// and divide `num` exactly (true for every step of the cyclotomic recursion).
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<BigInt> quot(dn - dd + 1);
    for (size_t i = dn + 1; i-- > dd;) {
        BigInt c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0) throw Error("cyclotomic division was not exact");
    return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(uint32_t m) {
    if (m == 0) throw DomainError("cyclotomic polynomial needs m >= 1");
    static std::mutex mu;
    static std::map<uint32_t, std::vector<BigInt>> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    std::function<std::vector<BigInt>(uint32_t)> phi = [&](uint32_t k) -> std::vector<BigInt> {
        if (auto it = cache.find(k); it != cache.end()) return it->second;
        // x^k - 1 divided by Phi_d for every proper divisor d of k
        std::vector<BigInt> num(k + 1);
        num[0] = -1;
        num[k] = 1;
        for (uint32_t d = 1; d < k; ++d)
            if (k % d == 0) num = divide_exact(std::move(num), phi(d));
        cache.emplace(k, num);
        return num;
    };
    return phi(m);
}

CyclotomicSum::CyclotomicSum(uint32_t order) : m_(order), counts_(order, 0) {
    if (order == 0) throw DomainError("character order must be positive");
}

void CyclotomicSum::accumulate(uint32_t exponent, int64_t weight) {
    if (exponent >= m_) throw DomainError("root-of-unity exponent out of range");
    counts_[exponent] += weight;
}

std::vector<BigInt> CyclotomicSum::reduced() const {
    const std::vector<BigInt> phi = cyclotomic_polynomial(m_);
    const size_t deg = phi.size() - 1;  // = totient(m)
    std::vector<BigInt> rem(counts_.begin(), counts_.end());
    if (rem.size() < deg) rem.resize(deg);
    for (size_t i = rem.size(); i-- > deg;) {
        BigInt c = rem[i];
        if (c == 0) continue;
        for (size_t j = 0; j <= deg; ++j) rem[i - deg + j] -= c * phi[j];
    }
    rem.resize(deg == 0 ? 1 : deg);
    return rem;
}

std::optional<BigInt> CyclotomicSum::as_integer() const {
    std::vector<BigInt> rem = reduced();
    for (size_t i = 1; i < rem.size(); ++i)
        if (rem[i] != 0) return std::nullopt;
    return rem[0];
}

bool CyclotomicSum::is_zero() const {
    for (const BigInt& c : reduced())
        if (c != 0) return false;
    return true;
}

bool CyclotomicSum::operator==(const CyclotomicSum& other) const {
    if (m_ != other.m_) throw DomainError("cannot compare sums over different root orders");
    return reduced() == other.reduced();
}

}  // namespace mspotty
