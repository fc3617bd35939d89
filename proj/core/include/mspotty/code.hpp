#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "mspotty/ring.hpp"

namespace mspotty {

constexpr uint64_t kDefaultBudget = 1ull << 24;  // evaluated vectors / pairs

// A linear code over a Ring with byte structure: n bytes of b symbols each.
// The full codeword set is enumerated at construction and kept sorted, so
// codes are immutable values afterwards.
class LinearCode {
  public:
    using Word = std::vector<Elem>;

    const Ring& ring() const { return *ring_; }
    const std::shared_ptr<const Ring>& ring_ptr() const { return ring_; }
    uint32_t byte_len() const { return b_; }
    uint32_t byte_count() const { return n_; }
    uint32_t length() const { return b_ * n_; }
    const std::vector<Word>& generators() const { return generators_; }
    const std::vector<Word>& codewords() const { return codewords_; }
    uint64_t size() const { return codewords_.size(); }
    bool contains(const Word& w) const;
    bool same_codewords(const LinearCode& other) const;

    // Internal factory; use span / dual_brute / combine to build codes.
    static LinearCode from_parts(std::shared_ptr<const Ring> ring, uint32_t b, uint32_t n,
                                 std::vector<Word> generators, std::vector<Word> sorted_words);

  private:
    LinearCode() = default;
    std::shared_ptr<const Ring> ring_;
    uint32_t b_ = 0, n_ = 0;
    std::vector<Word> generators_;
    std::vector<Word> codewords_;  // sorted, deduplicated; always contains 0
};

// Span of the generators: all coefficient combinations, deduplicated. The
// generators need not be independent. Enumerates ell^(#generators) vectors
// and fails with BudgetError beyond `budget`.
LinearCode span(std::shared_ptr<const Ring> ring, uint32_t b, uint32_t n,
                std::vector<LinearCode::Word> generators, uint64_t budget = kDefaultBudget);

// All vectors orthogonal to every generator, by scanning the full ambient
// space (ell^N vectors, budget-guarded).
LinearCode dual_brute(const LinearCode& code, uint64_t budget = kDefaultBudget);

// Histogram of byte-weight count vectors (alpha_0..alpha_b) over codewords.
struct AlphaDistribution {
    uint32_t b = 0, n = 0;
    std::map<std::vector<uint32_t>, uint64_t> counts;
    uint64_t total() const;
};

// Histogram of per-byte Hamming weight profiles (j_1..j_n).
struct ProfileDistribution {
    uint32_t b = 0, n = 0;
    std::map<std::vector<uint32_t>, uint64_t> counts;
    uint64_t total() const;
};

// Histogram of (j, k, delta) profile triples over codeword pairs.
struct JointStats {
    uint32_t b = 0, n = 0;
    std::map<std::array<std::vector<uint32_t>, 3>, uint64_t> counts;
    uint64_t total() const;
};

// Histogram of per-byte element-composition vectors; each byte contributes an
// ell-tuple counting occurrences of every ring element.
struct CompositionDistribution {
    uint32_t b = 0, n = 0;
    uint64_t ell = 0;
    std::map<std::vector<std::vector<uint32_t>>, uint64_t> counts;
    uint64_t total() const;
};

AlphaDistribution alpha_distribution(const LinearCode& code);
ProfileDistribution profile_distribution(const LinearCode& code);
JointStats joint_statistics(const LinearCode& c, const LinearCode& d,
                            uint64_t pair_budget = kDefaultBudget);
CompositionDistribution composition_distribution(const LinearCode& code);

std::vector<uint32_t> weight_profile(std::span<const Elem> word, uint32_t b);
std::vector<std::vector<uint32_t>> composition_vector(const Ring& ring, std::span<const Elem> word,
                                                      uint32_t b);

}  // namespace mspotty
