#include "mspotty/weights.hpp"

#include "mspotty/bigint.hpp"

namespace mspotty {

SpottyParams::SpottyParams(uint32_t byte_len, uint32_t spotty_t) : b(byte_len), t(spotty_t) {
    if (b < 1 || t < 1 || t > b) throw DomainError("spotty parameters need 1 <= t <= b");
}

uint32_t hamming_weight(std::span<const Elem> v) {
    uint32_t w = 0;
    for (Elem x : v) w += x != 0;
    return w;
}

uint32_t ceil_case(uint32_t residue_sum, uint32_t t) {
    if (residue_sum == 0) return 0;
    return residue_sum <= t ? 1 : 2;
}

namespace {

void check_word(std::span<const Elem> word, const SpottyParams& params) {
    if (params.b == 0 || word.size() % params.b != 0)
        throw DomainError("word length must be a multiple of the byte length");
}

}  // namespace

uint64_t m_spotty_hamming_weight(std::span<const Elem> word, const SpottyParams& params) {
    check_word(word, params);
    uint64_t total = 0;
    for (size_t i = 0; i < word.size(); i += params.b)
        total += ceil_div(hamming_weight(word.subspan(i, params.b)), params.t);
    return total;
}

uint64_t m_spotty_distance(std::span<const Elem> u, std::span<const Elem> v,
                           const SpottyParams& params) {
    if (u.size() != v.size()) throw DomainError("distance needs equal lengths");
    check_word(u, params);
    uint64_t total = 0;
    for (size_t i = 0; i < u.size(); i += params.b) {
        uint32_t d = 0;
        for (size_t j = i; j < i + params.b; ++j) d += u[j] != v[j];
        total += ceil_div(d, params.t);
    }
    return total;
}

PairCounts pair_counts(std::span<const Elem> u, std::span<const Elem> v) {
    if (u.size() != v.size()) throw DomainError("pair counts need equal lengths");
    PairCounts c;
    for (size_t i = 0; i < u.size(); ++i) {
        const bool un = u[i] != 0, vn = v[i] != 0;
        c.f01 += !un && vn;
        c.f10 += un && !vn;
        c.f11 += un && vn;
    }
    return c;
}

JklValues jkl(std::span<const Elem> u, std::span<const Elem> v, const SpottyParams& params) {
    if (u.size() != v.size()) throw DomainError("jkl needs equal lengths");
    check_word(u, params);
    const uint32_t t = params.t;
    JklValues out;
    for (size_t i = 0; i < u.size(); i += params.b) {
        const PairCounts c = pair_counts(u.subspan(i, params.b), v.subspan(i, params.b));
        out.j += c.f01 / t + ceil_case(c.f01 % t + c.f11 % t, t);
        out.k += c.f10 / t + ceil_case(c.f10 % t + c.f11 % t, t);
        out.l += c.f11 / t;
    }
    return out;
}

uint64_t lee_weight_of_byte(const Ring& ring, std::span<const Elem> byte) {
    uint64_t w = 0;
    for (Elem x : byte) w += ring.lee_weight(x);
    return w;
}

uint64_t m_spotty_lee_weight(const Ring& ring, std::span<const Elem> word,
                             const SpottyParams& params) {
    if (!ring.is_rk()) throw UnsupportedError("m-spotty Lee weight is defined on R_k only");
    check_word(word, params);
    uint64_t total = 0;
    for (size_t i = 0; i < word.size(); i += params.b)
        total += ceil_div(lee_weight_of_byte(ring, word.subspan(i, params.b)), params.t);
    return total;
}

uint64_t m_spotty_lee_distance(const Ring& ring, std::span<const Elem> u,
                               std::span<const Elem> v, const SpottyParams& params) {
    if (u.size() != v.size()) throw DomainError("distance needs equal lengths");
    std::vector<Elem> diff(u.size());
    for (size_t i = 0; i < u.size(); ++i) diff[i] = ring.sub(u[i], v[i]);
    return m_spotty_lee_weight(ring, diff, params);
}

}  // namespace mspotty
