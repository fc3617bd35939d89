#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "mspotty/code.hpp"
#include "mspotty/poly.hpp"
#include "mspotty/weights.hpp"

namespace mspotty {

// Memoized transform kernels. Reads and racing fills are safe: recomputation
// yields identical polynomials.
class KernelCache {
  public:
    // theta_j^{(b,ell)}(z): the Hamming transform kernel.
    const MultiPoly& theta(uint32_t j, uint32_t b, uint64_t ell, uint32_t t);

    // G_{wu,wv}^{(overlap)}(x,y,z): single-dual joint kernel, where wu is the
    // weight of the byte hit by the character sum and wv the weight of the
    // fixed byte appearing in the pair statistics.
    const MultiPoly& g_kernel(uint32_t wu, uint32_t wv, uint32_t overlap, uint32_t b, uint64_t ell,
                              uint32_t t);

    // H_{wu,wv}^{(overlap)}(x,y,z): double-dual joint kernel; both bytes are
    // hit by character sums.
    const MultiPoly& h_kernel(uint32_t wu, uint32_t wv, uint32_t overlap, uint32_t b, uint64_t ell,
                              uint32_t t);

    // g_j^{(t)}(x,y): split transform kernel built from Krawtchouk values.
    const MultiPoly& split_kernel(uint32_t j, uint32_t b, uint64_t ell, uint32_t t);

    // g_J^{(t)}(z): Lee transform kernel for a byte composition J (R_k only).
    const MultiPoly& lee_kernel(const std::vector<uint32_t>& composition, const Ring& ring,
                                uint32_t t);

    // Overwrites a cached theta polynomial. Test hook for negative controls;
    // a poisoned kernel must make the verification suites fail.
    void inject_theta(uint32_t j, uint32_t b, uint64_t ell, uint32_t t, MultiPoly poly);

  private:
    using Key4 = std::tuple<uint32_t, uint32_t, uint64_t, uint32_t>;
    using Key6 = std::tuple<uint32_t, uint32_t, uint32_t, uint32_t, uint64_t, uint32_t>;
    using LeeKey = std::tuple<std::vector<uint32_t>, std::string, uint32_t>;
    using RowKey = std::tuple<std::string, uint32_t, uint32_t>;  // ring, element, row total

    std::mutex mu_;
    std::map<Key4, MultiPoly> theta_, split_;
    std::map<Key6, MultiPoly> g_, h_;
    std::map<LeeKey, MultiPoly> lee_;
    std::map<RowKey, std::vector<BigInt>> lee_rows_;  // signed counts by raw Lee weight
};

// ---- direct enumerators (never touch the kernels) ------------------------

// W(z) = sum over codewords of z^{w_M}.
MultiPoly hamming_enumerator(const LinearCode& code, const SpottyParams& params);

// Joint enumerator sum over pairs of x^J y^K z^L.
MultiPoly joint_enumerator(const LinearCode& c, const LinearCode& d, const SpottyParams& params,
                           uint64_t pair_budget = kDefaultBudget);

// Split enumerator: product over bytes of x_i^{ceil(b/t)-w_M(u_i)} y_i^{w_M(u_i)}.
MultiPoly split_enumerator(const LinearCode& code, const SpottyParams& params);

// L(z) = sum over codewords of z^{w_ML}; R_k only.
MultiPoly lee_enumerator(const LinearCode& code, const SpottyParams& params);

// ---- MacWilliams transforms ----------------------------------------------

// Dual Hamming enumerator from the primal alpha distribution.
MultiPoly macwilliams_hamming(const AlphaDistribution& dist, const BigInt& code_size,
                              uint64_t ell, const SpottyParams& params, KernelCache& cache);

enum class JointDual {
    DualFirst,   // J_{C-dual, D}
    DualSecond,  // J_{C, D-dual}
    DualBoth,    // J_{C-dual, D-dual}
};

MultiPoly joint_macwilliams(JointDual which, const JointStats& stats, const BigInt& size_c,
                            const BigInt& size_d, uint64_t ell, const SpottyParams& params,
                            KernelCache& cache);

// K_p(j) over an alphabet of size ell and length b.
BigInt krawtchouk(uint32_t p, uint32_t j, uint32_t b, uint64_t ell);

// Dual split enumerator from the primal profile distribution.
MultiPoly split_macwilliams(const ProfileDistribution& dist, const BigInt& code_size,
                            uint64_t ell, const SpottyParams& params, KernelCache& cache);

// Dual Lee enumerator from the primal composition distribution; R_k only.
MultiPoly lee_macwilliams(const CompositionDistribution& dist, const BigInt& code_size,
                          const Ring& ring, const SpottyParams& params, KernelCache& cache);

// ---- code combinators ------------------------------------------------------

enum class CombineKind {
    DirectSum,       // juxtapose codeword pairs (u|v)
    ParallelConcat,  // interleave halves (u'|v'|u''|v''), n even
};

LinearCode combine(CombineKind kind, const LinearCode& c, const LinearCode& d,
                   uint64_t budget = kDefaultBudget);

}  // namespace mspotty
