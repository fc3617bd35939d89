#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mspotty/errors.hpp"

namespace mspotty {

// Canonical element encoding: a single index in [0, ell).
using Elem = uint32_t;

enum class RingFamily : uint8_t {
    IntegersMod,  // Z_ell
    PrimeField,   // F_p
    ChainRing,    // F_p[u]/(u^e), base-p digits of the index are the u-coefficients
    Rk,           // F_2[u_1..u_k]/(u_i^2, u_i u_j - u_j u_i), index bit t = coeff of
                  // the monomial whose variable set has bitmask t over {1..k}
};

struct RingSpec {
    RingFamily family = RingFamily::IntegersMod;
    uint64_t p = 0;  // IntegersMod: ell; PrimeField / ChainRing: the prime
    uint32_t e = 0;  // ChainRing: chain length; Rk: k

    static RingSpec integers_mod(uint64_t ell) { return {RingFamily::IntegersMod, ell, 0}; }
    static RingSpec prime_field(uint64_t p) { return {RingFamily::PrimeField, p, 0}; }
    static RingSpec chain_ring(uint64_t p, uint32_t e) { return {RingFamily::ChainRing, p, e}; }
    static RingSpec rk(uint32_t k) { return {RingFamily::Rk, 2, k}; }

    bool operator==(const RingSpec&) const = default;
};

// A finite commutative Frobenius ring with a fixed generating character
// chi(a) = zeta_m^{char_exponent(a)}. Immutable after construction; all
// operations are pure and safe to call concurrently.
class Ring {
  public:
    explicit Ring(const RingSpec& spec);

    const RingSpec& spec() const { return spec_; }
    RingFamily family() const { return spec_.family; }
    uint64_t size() const { return ell_; }          // ell
    uint64_t char_order() const { return m_; }      // m, the order of chi's values
    bool is_rk() const { return spec_.family == RingFamily::Rk; }

    Elem add(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    // chi(a) = zeta_m^{char_exponent(a)}; additive in a.
    uint32_t char_exponent(Elem a) const;

    Elem inner_product(std::span<const Elem> u, std::span<const Elem> v) const;

    // Gray image of an element of R_k: a bit vector of length 2^k. The Lee
    // weight is its Hamming weight. Both reject non-Rk rings.
    std::vector<uint8_t> gray_map(Elem a) const;
    uint32_t lee_weight(Elem a) const;

    // Element literal grammar: decimal residue for Z_ell / F_p; sums of
    // u-powers like `1+u+u2` for chain rings; sums of monomials like
    // `1+u1+u1u2` for R_k, with aliases u, v, uv when k <= 2.
    Elem parse_element(std::string_view text) const;
    std::string to_string(Elem a) const;

    std::string describe() const;  // e.g. "rk 2", "zmod 6", "chain 2 3"

  private:
    void check(Elem a) const {
        if (a >= ell_) throw DomainError("element index out of range");
    }
    uint32_t gray_bits(Elem a) const;  // packed Gray image, bit i = component i

    RingSpec spec_;
    uint64_t ell_ = 0;
    uint64_t m_ = 0;
    uint32_t chain_e_ = 0;
    uint32_t rk_monomials_ = 0;  // 2^k
    bool has_tables_ = false;
    std::vector<Elem> add_tab_, mul_tab_, neg_tab_;
    std::vector<uint8_t> lee_tab_;
};

std::shared_ptr<const Ring> make_ring(const RingSpec& spec);

// `zmod <ell>`, `gf <p>`, `chain <p> <e>`, `rk <k>`
RingSpec parse_ring_spec(std::span<const std::string> tokens);

}  // namespace mspotty
