#pragma once

#include <cstdint>
#include <span>

#include "mspotty/ring.hpp"

namespace mspotty {

// Byte geometry for spotty errors: bytes of length b, up to t error positions
// per spotty error.
struct SpottyParams {
    uint32_t b = 1;
    uint32_t t = 1;

    SpottyParams() = default;
    SpottyParams(uint32_t byte_len, uint32_t spotty_t);
};

// Positionwise zero/nonzero statistics of a byte pair.
struct PairCounts {
    uint32_t f01 = 0;  // u' zero, v' nonzero
    uint32_t f10 = 0;  // u' nonzero, v' zero
    uint32_t f11 = 0;  // both nonzero
};

uint32_t hamming_weight(std::span<const Elem> v);

// The +0/+1/+2 offset of the split ceiling: 0 when the residue sum is 0,
// 1 when it lies in (0, t], 2 when it lies in (t, 2t-2].
uint32_t ceil_case(uint32_t residue_sum, uint32_t t);

// Sum over bytes of ceil(byte Hamming weight / t).
uint64_t m_spotty_hamming_weight(std::span<const Elem> word, const SpottyParams& params);

uint64_t m_spotty_distance(std::span<const Elem> u, std::span<const Elem> v,
                           const SpottyParams& params);

PairCounts pair_counts(std::span<const Elem> u, std::span<const Elem> v);

struct JklValues {
    uint64_t j = 0;
    uint64_t k = 0;
    uint64_t l = 0;
};

// Bytewise J/K/L statistics of a codeword pair; J + L = w_M(v) and
// K + L = w_M(u).
JklValues jkl(std::span<const Elem> u, std::span<const Elem> v, const SpottyParams& params);

uint64_t lee_weight_of_byte(const Ring& ring, std::span<const Elem> byte);

// Sum over bytes of ceil(byte Lee weight / t); R_k rings only.
uint64_t m_spotty_lee_weight(const Ring& ring, std::span<const Elem> word,
                             const SpottyParams& params);

uint64_t m_spotty_lee_distance(const Ring& ring, std::span<const Elem> u,
                               std::span<const Elem> v, const SpottyParams& params);

}  // namespace mspotty
