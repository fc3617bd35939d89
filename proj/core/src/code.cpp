#include "mspotty/code.hpp"

#include <algorithm>
#include <optional>

#include "mspotty/bigint.hpp"
#include "mspotty/weights.hpp"

namespace mspotty {

namespace {

// ell^count if it stays within `limit`, nullopt otherwise
std::optional<uint64_t> checked_pow(uint64_t ell, uint32_t count, uint64_t limit) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < count; ++i) {
        if (v > limit / ell) return std::nullopt;
        v *= ell;
    }
    return v <= limit ? std::optional(v) : std::nullopt;
}

std::string pow_string(uint64_t ell, uint32_t count) {
    return ipow(BigInt(ell), count).str();
}

}  // namespace

LinearCode LinearCode::from_parts(std::shared_ptr<const Ring> ring, uint32_t b, uint32_t n,
                                  std::vector<Word> generators, std::vector<Word> sorted_words) {
    LinearCode c;
    c.ring_ = std::move(ring);
    c.b_ = b;
    c.n_ = n;
    c.generators_ = std::move(generators);
    c.codewords_ = std::move(sorted_words);
    return c;
}

bool LinearCode::contains(const Word& w) const {
    return std::binary_search(codewords_.begin(), codewords_.end(), w);
}

bool LinearCode::same_codewords(const LinearCode& other) const {
    return codewords_ == other.codewords_;
}

LinearCode span(std::shared_ptr<const Ring> ring, uint32_t b, uint32_t n,
                std::vector<LinearCode::Word> generators, uint64_t budget) {
    if (b < 1 || n < 1) throw DomainError("byte geometry needs b >= 1 and n >= 1");
    const uint32_t len = b * n;
    for (const auto& g : generators) {
        if (g.size() != len) throw DomainError("generator length must equal n*b");
        for (Elem x : g)
            if (x >= ring->size()) throw DomainError("generator entry out of range");
    }

    const uint64_t ell = ring->size();
    const auto count = checked_pow(ell, static_cast<uint32_t>(generators.size()), budget);
    if (!count)
        throw BudgetError("span enumeration over " + pow_string(ell, generators.size()) +
                              " coefficient vectors exceeds the budget",
                          pow_string(ell, generators.size()));

    // scaled[i][r] = r * g_i, precomputed so each coefficient tuple is a sum
    // of rows
    std::vector<std::vector<LinearCode::Word>> scaled(generators.size());
    for (size_t i = 0; i < generators.size(); ++i) {
        scaled[i].resize(ell);
        for (uint64_t r = 0; r < ell; ++r) {
            scaled[i][r].resize(len);
            for (uint32_t j = 0; j < len; ++j)
                scaled[i][r][j] = ring->mul(static_cast<Elem>(r), generators[i][j]);
        }
    }

    std::vector<LinearCode::Word> words;
    words.reserve(std::min<uint64_t>(*count, 1ull << 20));
    std::vector<Elem> coeff(generators.size(), 0);
    LinearCode::Word current(len, 0);
    for (uint64_t step = 0;; ++step) {
        for (uint32_t j = 0; j < len; ++j) {
            Elem s = 0;
            for (size_t i = 0; i < generators.size(); ++i)
                s = ring->add(s, scaled[i][coeff[i]][j]);
            current[j] = s;
        }
        words.push_back(current);
        if (step + 1 == *count) break;
        for (size_t i = 0;; ++i) {
            if (coeff[i] + 1 < ell) {
                ++coeff[i];
                break;
            }
            coeff[i] = 0;
        }
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return LinearCode::from_parts(std::move(ring), b, n, std::move(generators), std::move(words));
}

LinearCode dual_brute(const LinearCode& code, uint64_t budget) {
    const Ring& ring = code.ring();
    const uint64_t ell = ring.size();
    const uint32_t len = code.length();
    const auto count = checked_pow(ell, len, budget);
    if (!count)
        throw BudgetError("dual enumeration over " + pow_string(ell, len) +
                              " vectors exceeds the budget",
                          pow_string(ell, len));

    // Orthogonality constraints: the generators when we have them, otherwise
    // every nonzero codeword (dual codes carry no generators).
    std::vector<LinearCode::Word> constraint_storage;
    std::span<const LinearCode::Word> constraints;
    if (!code.generators().empty() || code.size() == 1) {
        constraints = code.generators();
    } else {
        for (const auto& w : code.codewords())
            if (hamming_weight(w) != 0) constraint_storage.push_back(w);
        constraints = constraint_storage;
    }

    std::vector<LinearCode::Word> words;
    LinearCode::Word v(len, 0);
    if (constraints.size() <= 8) {
        // few constraints: walk the odometer keeping running inner products.
        // delta[g][j][a] = g_j * (a+1 mod ell) - g_j * a, so stepping the
        // digit at position j from a adjusts each sum with one lookup.
        std::vector<std::vector<std::vector<Elem>>> delta(constraints.size());
        for (size_t g = 0; g < constraints.size(); ++g) {
            delta[g].resize(len);
            for (uint32_t j = 0; j < len; ++j) {
                delta[g][j].resize(ell);
                for (uint64_t a = 0; a < ell; ++a) {
                    const Elem here = ring.mul(static_cast<Elem>(a), constraints[g][j]);
                    const Elem next =
                        ring.mul(static_cast<Elem>((a + 1) % ell), constraints[g][j]);
                    delta[g][j][a] = ring.sub(next, here);
                }
            }
        }
        std::vector<Elem> psum(constraints.size(), 0);
        auto all_zero = [&] {
            for (Elem s : psum)
                if (s != 0) return false;
            return true;
        };
        if (all_zero()) words.push_back(v);
        for (uint64_t step = 1; step < *count; ++step) {
            uint32_t j = 0;
            while (true) {
                for (size_t g = 0; g < constraints.size(); ++g)
                    psum[g] = ring.add(psum[g], delta[g][j][v[j]]);
                if (v[j] + 1 < ell) {
                    ++v[j];
                    break;
                }
                v[j] = 0;
                ++j;
            }
            if (all_zero()) words.push_back(v);
        }
    } else {
        // many constraints: most candidates fail on the first few, so an
        // early-exit scan wins over incremental bookkeeping
        for (uint64_t step = 0;; ++step) {
            bool orthogonal = true;
            for (const auto& c : constraints) {
                if (ring.inner_product(c, v) != 0) {
                    orthogonal = false;
                    break;
                }
            }
            if (orthogonal) words.push_back(v);
            if (step + 1 == *count) break;
            for (uint32_t j = 0; j < len; ++j) {
                if (v[j] + 1 < ell) {
                    ++v[j];
                    break;
                }
                v[j] = 0;
            }
        }
    }
    std::sort(words.begin(), words.end());
    return LinearCode::from_parts(code.ring_ptr(), code.byte_len(), code.byte_count(), {},
                                  std::move(words));
}

uint64_t AlphaDistribution::total() const {
    uint64_t t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

uint64_t ProfileDistribution::total() const {
    uint64_t t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

uint64_t JointStats::total() const {
    uint64_t t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

uint64_t CompositionDistribution::total() const {
    uint64_t t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
}

std::vector<uint32_t> weight_profile(std::span<const Elem> word, uint32_t b) {
    std::vector<uint32_t> profile(word.size() / b);
    for (size_t i = 0; i < profile.size(); ++i)
        profile[i] = hamming_weight(word.subspan(i * b, b));
    return profile;
}

std::vector<std::vector<uint32_t>> composition_vector(const Ring& ring, std::span<const Elem> word,
                                                      uint32_t b) {
    std::vector<std::vector<uint32_t>> comp(word.size() / b);
    for (size_t i = 0; i < comp.size(); ++i) {
        comp[i].assign(ring.size(), 0);
        for (uint32_t j = 0; j < b; ++j) ++comp[i][word[i * b + j]];
    }
    return comp;
}

AlphaDistribution alpha_distribution(const LinearCode& code) {
    AlphaDistribution dist{code.byte_len(), code.byte_count(), {}};
    const uint32_t b = code.byte_len();
    for (const auto& w : code.codewords()) {
        std::vector<uint32_t> alpha(b + 1, 0);
        for (uint32_t wgt : weight_profile(w, b)) ++alpha[wgt];
        ++dist.counts[alpha];
    }
    return dist;
}

ProfileDistribution profile_distribution(const LinearCode& code) {
    ProfileDistribution dist{code.byte_len(), code.byte_count(), {}};
    for (const auto& w : code.codewords()) ++dist.counts[weight_profile(w, code.byte_len())];
    return dist;
}

JointStats joint_statistics(const LinearCode& c, const LinearCode& d, uint64_t pair_budget) {
    if (c.ring().spec() != d.ring().spec() || c.byte_len() != d.byte_len() ||
        c.byte_count() != d.byte_count())
        throw DomainError("joint statistics need codes over the same ring and geometry");
    const BigInt pairs = BigInt(c.size()) * d.size();
    if (pairs > pair_budget)
        throw BudgetError("joint statistics over " + pairs.str() + " pairs exceed the budget",
                          pairs.str());
    const uint32_t b = c.byte_len(), n = c.byte_count();
    JointStats stats{b, n, {}};
    for (const auto& u : c.codewords()) {
        const auto ju = weight_profile(u, b);
        for (const auto& v : d.codewords()) {
            std::array<std::vector<uint32_t>, 3> key;
            key[0] = ju;
            key[1] = weight_profile(v, b);
            key[2].assign(n, 0);
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = 0; j < b; ++j)
                    key[2][i] += u[i * b + j] != 0 && v[i * b + j] != 0;
            ++stats.counts[key];
        }
    }
    return stats;
}

CompositionDistribution composition_distribution(const LinearCode& code) {
    if (!code.ring().is_rk())
        throw UnsupportedError("composition statistics feed the Lee pipeline, R_k only");
    CompositionDistribution dist{code.byte_len(), code.byte_count(), code.ring().size(), {}};
    for (const auto& w : code.codewords())
        ++dist.counts[composition_vector(code.ring(), w, code.byte_len())];
    return dist;
}

}  // namespace mspotty
