#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mspotty/code.hpp"
#include "mspotty/enumerators.hpp"

namespace mspotty {

struct Assertion {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    std::string instance;
    uint64_t seed = 0;
    std::vector<Assertion> assertions;

    bool all_pass() const;
    size_t failures() const;
    void expect_eq(const std::string& name, const std::string& expected, const std::string& actual);
    void expect(const std::string& name, bool ok, const std::string& detail = "");
    // One JSON object per assertion, one per line.
    void write_json_lines(std::ostream& out) const;
};

// ---- brute-force kernel oracles -------------------------------------------
// Direct character sums over the ambient byte space. They never touch the
// KernelCache closed forms; exactness is enforced through CyclotomicSum.

MultiPoly oracle_hamming_kernel(const Ring& ring, std::span<const Elem> c,
                                const SpottyParams& params);
MultiPoly oracle_g_kernel(const Ring& ring, std::span<const Elem> u, std::span<const Elem> v,
                          const SpottyParams& params);
MultiPoly oracle_h_kernel(const Ring& ring, std::span<const Elem> u, std::span<const Elem> v,
                          const SpottyParams& params);
MultiPoly oracle_split_kernel(const Ring& ring, std::span<const Elem> c,
                              const SpottyParams& params);
MultiPoly oracle_lee_kernel(const Ring& ring, std::span<const Elem> u, const SpottyParams& params);

// ---- checkers ---------------------------------------------------------------

// Character-sum lemmas on sampled (or exhaustive, when the byte space is
// small) bytes: support-restricted sums, their closed forms, and the full
// byte transform sum.
VerificationReport check_character_lemmas(const Ring& ring, uint32_t b, uint32_t t,
                                          uint64_t budget, uint64_t seed, size_t samples);

enum class IdentityKind { Hamming, JointDualFirst, JointDualSecond, JointDualBoth, Split, Lee };

std::string identity_kind_name(IdentityKind kind);

// Transform output against the direct enumerator of the brute-forced dual.
VerificationReport check_identity(IdentityKind kind, const LinearCode& c, const LinearCode* d,
                                  const SpottyParams& params, uint64_t budget, KernelCache& cache);

// Joint enumerator specialization properties.
VerificationReport check_joint_properties(const LinearCode& c, const LinearCode& d,
                                          const SpottyParams& params, uint64_t pair_budget);

// Lee kernel against the direct byte sum for every byte (or a sample).
VerificationReport check_lee_kernel(const Ring& ring, uint32_t b, uint32_t t, uint64_t budget,
                                    KernelCache& cache, size_t samples = 0);

// |C| * |C-dual| = ell^N and double-dual involution.
VerificationReport check_duality(const LinearCode& code, uint64_t budget);

// ---- suites ------------------------------------------------------------------

struct SweepOptions {
    uint64_t seed = 0;
    size_t instances = 200;
    uint64_t budget = kDefaultBudget;     // span / combine budget
    uint64_t vector_cap = 1ull << 20;     // cap on ell^N for brute duals
    uint64_t pair_cap = 1ull << 18;       // cap on direct joint enumerations
};

// Randomized instances over the supported ring pool; every applicable
// identity kind is checked per instance.
std::vector<VerificationReport> run_identity_sweep(const SweepOptions& options, KernelCache& cache);

// Character lemmas, the ceiling split lemma, the J/K/L identities, joint
// enumerator properties, Lee kernel equality and duality checks.
std::vector<VerificationReport> run_lemma_suite(uint64_t seed, uint64_t budget, KernelCache& cache);

}  // namespace mspotty
