#include "mspotty/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mspotty/cyclotomic.hpp"

namespace mspotty {

bool VerificationReport::all_pass() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.pass; });
}

size_t VerificationReport::failures() const {
    return static_cast<size_t>(std::count_if(assertions.begin(), assertions.end(),
                                             [](const Assertion& a) { return !a.pass; }));
}

void VerificationReport::expect_eq(const std::string& name, const std::string& expected,
                                   const std::string& actual) {
    assertions.push_back({name, expected == actual, expected, actual});
}

void VerificationReport::expect(const std::string& name, bool ok, const std::string& detail) {
    assertions.push_back({name, ok, ok ? "" : "pass", ok ? "" : detail});
}

void VerificationReport::write_json_lines(std::ostream& out) const {
    for (const Assertion& a : assertions) {
        nlohmann::json line{{"suite", suite},   {"instance", instance}, {"seed", seed},
                            {"assertion", a.name}, {"pass", a.pass}};
        if (!a.pass) {
            line["expected"] = a.expected;
            line["actual"] = a.actual;
        }
        out << line.dump() << "\n";
    }
}

namespace {

// Iterates all vectors of R^len in odometer order.
class VectorScan {
  public:
    VectorScan(const Ring& ring, uint32_t len) : ring_(ring), v_(len, 0) {}

    const std::vector<Elem>& current() const { return v_; }

    bool advance() {
        for (uint32_t j = 0; j < v_.size(); ++j) {
            if (v_[j] + 1 < ring_.size()) {
                ++v_[j];
                return true;
            }
            v_[j] = 0;
        }
        return false;
    }

  private:
    const Ring& ring_;
    std::vector<Elem> v_;
};

std::optional<uint64_t> checked_pow(uint64_t ell, uint32_t count, uint64_t limit) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < count; ++i) {
        if (v > limit / ell) return std::nullopt;
        v *= ell;
    }
    return v;
}

void require_budget(uint64_t ell, uint32_t len, uint64_t budget, const char* what) {
    if (!checked_pow(ell, len, budget))
        throw BudgetError(std::string(what) + " would scan more vectors than the budget allows",
                          ipow(BigInt(ell), len).str());
}

// Accumulates character-weighted terms keyed by up to three exponents and
// converts to an integer polynomial at the end, enforcing that every
// coefficient is an exact integer.
class ExactAccum {
  public:
    explicit ExactAccum(uint32_t order) : m_(order) {}

    void add(std::array<uint64_t, 3> key, uint32_t chi_exponent) {
        auto [it, inserted] = cells_.try_emplace(key, m_);
        it->second.accumulate(chi_exponent, 1);
    }

    // vars: a monomial builder from the exponent triple
    template <typename MonoFn>
    MultiPoly to_poly(MonoFn&& mono) const {
        MultiPoly p;
        for (const auto& [key, sum] : cells_) {
            auto value = sum.as_integer();
            if (!value)
                throw IntegralityError("character sum did not reduce to an integer");
            if (*value != 0) p.add_term(mono(key), *value);
        }
        return p;
    }

    const std::map<std::array<uint64_t, 3>, CyclotomicSum>& cells() const { return cells_; }

  private:
    uint32_t m_;
    std::map<std::array<uint64_t, 3>, CyclotomicSum> cells_;
};

Monomial z_mono(uint64_t e) {
    Monomial m;
    if (e) m.emplace_back(Var::z(), static_cast<uint32_t>(e));
    return m;
}

Monomial xyz_mono(uint64_t xe, uint64_t ye, uint64_t ze) {
    Monomial m;
    if (ze) m.emplace_back(Var::z(), static_cast<uint32_t>(ze));
    if (xe) m.emplace_back(Var::x(), static_cast<uint32_t>(xe));
    if (ye) m.emplace_back(Var::y(), static_cast<uint32_t>(ye));
    std::sort(m.begin(), m.end());
    return m;
}

std::string word_string(const Ring& ring, std::span<const Elem> w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += ring.to_string(w[i]);
    }
    return s + ")";
}

std::string code_string(const LinearCode& code) {
    std::ostringstream os;
    os << "ring=" << code.ring().describe() << " b=" << code.byte_len()
       << " n=" << code.byte_count() << " gens=[";
    const auto& gens = code.generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << "; ";
        os << word_string(code.ring(), gens[i]);
    }
    os << "] size=" << code.size();
    return os.str();
}

}  // namespace

// ---- kernel oracles ---------------------------------------------------------

MultiPoly oracle_hamming_kernel(const Ring& ring, std::span<const Elem> c,
                                const SpottyParams& params) {
    ExactAccum acc(static_cast<uint32_t>(ring.char_order()));
    VectorScan scan(ring, static_cast<uint32_t>(c.size()));
    do {
        const auto& v = scan.current();
        const uint32_t chi = ring.char_exponent(ring.inner_product(c, v));
        acc.add({ceil_div(hamming_weight(v), params.t), 0, 0}, chi);
    } while (scan.advance());
    return acc.to_poly([](const std::array<uint64_t, 3>& k) { return z_mono(k[0]); });
}

MultiPoly oracle_g_kernel(const Ring& ring, std::span<const Elem> u, std::span<const Elem> v,
                          const SpottyParams& params) {
    if (u.size() != v.size()) throw DomainError("oracle needs equal byte lengths");
    ExactAccum acc(static_cast<uint32_t>(ring.char_order()));
    VectorScan scan(ring, static_cast<uint32_t>(u.size()));
    do {
        const auto& w = scan.current();
        const uint32_t chi = ring.char_exponent(ring.inner_product(u, w));
        const JklValues s = jkl(w, v, params);
        acc.add({s.j, s.k, s.l}, chi);
    } while (scan.advance());
    return acc.to_poly([](const std::array<uint64_t, 3>& k) { return xyz_mono(k[0], k[1], k[2]); });
}

MultiPoly oracle_h_kernel(const Ring& ring, std::span<const Elem> u, std::span<const Elem> v,
                          const SpottyParams& params) {
    if (u.size() != v.size()) throw DomainError("oracle needs equal byte lengths");
    const uint32_t m = static_cast<uint32_t>(ring.char_order());
    ExactAccum acc(m);
    VectorScan outer(ring, static_cast<uint32_t>(u.size()));
    do {
        const auto& w = outer.current();
        const uint32_t chi_u = ring.char_exponent(ring.inner_product(u, w));
        VectorScan inner(ring, static_cast<uint32_t>(u.size()));
        do {
            const auto& wp = inner.current();
            const uint32_t chi = (chi_u + ring.char_exponent(ring.inner_product(v, wp))) % m;
            const JklValues s = jkl(w, wp, params);
            acc.add({s.j, s.k, s.l}, chi);
        } while (inner.advance());
    } while (outer.advance());
    return acc.to_poly([](const std::array<uint64_t, 3>& k) { return xyz_mono(k[0], k[1], k[2]); });
}

MultiPoly oracle_split_kernel(const Ring& ring, std::span<const Elem> c,
                              const SpottyParams& params) {
    ExactAccum acc(static_cast<uint32_t>(ring.char_order()));
    const uint64_t cap = ceil_div(params.b, params.t);
    VectorScan scan(ring, static_cast<uint32_t>(c.size()));
    do {
        const auto& v = scan.current();
        const uint32_t chi = ring.char_exponent(ring.inner_product(c, v));
        const uint64_t wm = ceil_div(hamming_weight(v), params.t);
        acc.add({cap - wm, wm, 0}, chi);
    } while (scan.advance());
    return acc.to_poly([](const std::array<uint64_t, 3>& k) {
        Monomial m;
        if (k[0]) m.emplace_back(Var::x(), static_cast<uint32_t>(k[0]));
        if (k[1]) m.emplace_back(Var::y(), static_cast<uint32_t>(k[1]));
        return m;
    });
}

MultiPoly oracle_lee_kernel(const Ring& ring, std::span<const Elem> u, const SpottyParams& params) {
    if (!ring.is_rk()) throw UnsupportedError("Lee oracle is defined on R_k only");
    ExactAccum acc(static_cast<uint32_t>(ring.char_order()));
    VectorScan scan(ring, static_cast<uint32_t>(u.size()));
    do {
        const auto& v = scan.current();
        const uint32_t chi = ring.char_exponent(ring.inner_product(u, v));
        acc.add({ceil_div(lee_weight_of_byte(ring, v), params.t), 0, 0}, chi);
    } while (scan.advance());
    return acc.to_poly([](const std::array<uint64_t, 3>& k) { return z_mono(k[0]); });
}

// ---- character lemmas ---------------------------------------------------------

VerificationReport check_character_lemmas(const Ring& ring, uint32_t b, uint32_t t,
                                          uint64_t budget, uint64_t seed, size_t samples) {
    const uint64_t ell = ring.size();
    require_budget(ell, b, budget, "character lemma check");
    const uint32_t m = static_cast<uint32_t>(ring.char_order());

    VerificationReport report;
    report.suite = "character-lemmas";
    report.seed = seed;
    {
        std::ostringstream os;
        os << "ring=" << ring.describe() << " b=" << b << " t=" << t;
        report.instance = os.str();
    }

    // orthogonality sums over the whole ring: sum_r chi(a r)
    {
        bool ok = true;
        std::string detail;
        for (uint64_t a = 0; a < ell && ok; ++a) {
            CyclotomicSum sum(m);
            for (uint64_t r = 0; r < ell; ++r)
                sum.accumulate(ring.char_exponent(ring.mul(static_cast<Elem>(a), static_cast<Elem>(r))), 1);
            const BigInt expected = a == 0 ? BigInt(ell) : BigInt(0);
            const auto got = sum.as_integer();
            if (!got || *got != expected) {
                ok = false;
                detail = "a=" + ring.to_string(static_cast<Elem>(a));
            }
        }
        report.expect("scaled character sums vanish off zero", ok, detail);
    }

    // choose bytes: exhaustive when small, sampled otherwise
    std::vector<std::vector<Elem>> bytes;
    const auto total = checked_pow(ell, b, 4096);
    if (total) {
        VectorScan scan(ring, b);
        do bytes.push_back(scan.current());
        while (scan.advance());
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<uint64_t> dist(0, ell - 1);
        for (size_t i = 0; i < std::max<size_t>(samples, 1); ++i) {
            std::vector<Elem> c(b);
            for (auto& x : c) x = static_cast<Elem>(dist(rng));
            bytes.push_back(std::move(c));
        }
    }

    bool support_ok = true, subset_ok = true, transform_ok = true;
    std::string support_detail, subset_detail, transform_detail;

    for (const auto& c : bytes) {
        const uint32_t j = hamming_weight(c);

        // classify every v by (|supp(v) n supp(c)|, |supp(v) \ supp(c)|)
        std::map<std::pair<uint32_t, uint32_t>, CyclotomicSum> cells;
        VectorScan scan(ring, b);
        do {
            const auto& v = scan.current();
            uint32_t j1 = 0, j2 = 0;
            for (uint32_t i = 0; i < b; ++i) {
                if (v[i] == 0) continue;
                (c[i] != 0 ? j1 : j2) += 1;
            }
            auto [it, ins] = cells.try_emplace({j1, j2}, m);
            it->second.accumulate(ring.char_exponent(ring.inner_product(c, v)), 1);
        } while (scan.advance());

        for (const auto& [key, sum] : cells) {
            const auto [j1, j2] = key;
            BigInt expected = binomial(j, j1) * binomial(b - j, j2) * ipow(BigInt(ell) - 1, j2);
            if (j1 & 1) expected = -expected;
            const auto got = sum.as_integer();
            if (support_ok && (!got || *got != expected)) {
                support_ok = false;
                support_detail = "c=" + word_string(ring, c) + " j1=" + std::to_string(j1) +
                                 " j2=" + std::to_string(j2);
            }
        }

        // full byte transform sum against its closed form
        {
            std::map<uint64_t, BigInt> closed;
            for (uint32_t j1 = 0; j1 <= j; ++j1)
                for (uint32_t j2 = 0; j2 + j <= b; ++j2) {
                    BigInt coef = binomial(j, j1) * binomial(b - j, j2) * ipow(BigInt(ell) - 1, j2);
                    if (j1 & 1) coef = -coef;
                    closed[ceil_div(j1 + j2, t)] += coef;
                }
            std::map<uint64_t, BigInt> direct;
            for (const auto& [key, sum] : cells) {
                const auto got = sum.as_integer();
                if (!got) {
                    transform_ok = false;
                    transform_detail = "non-integer sum at c=" + word_string(ring, c);
                    break;
                }
                direct[ceil_div(key.first + key.second, t)] += *got;
            }
            for (auto& [e, v] : closed)
                if (direct[e] != v && transform_ok) {
                    transform_ok = false;
                    transform_detail = "c=" + word_string(ring, c) + " z^" + std::to_string(e);
                }
        }

        // fixed-support sums over subsets of supp(c)
        if (j > 0) {
            std::vector<uint32_t> support;
            for (uint32_t i = 0; i < b; ++i)
                if (c[i] != 0) support.push_back(i);
            for (uint32_t mask = 1; mask < (1u << j); ++mask) {
                std::vector<uint32_t> positions;
                for (uint32_t i = 0; i < j; ++i)
                    if ((mask >> i) & 1) positions.push_back(support[i]);
                const uint32_t p = static_cast<uint32_t>(positions.size());
                CyclotomicSum within(m), exact(m);
                std::vector<Elem> v(b, 0);
                VectorScan sub(ring, p);
                do {
                    const auto& vals = sub.current();
                    uint32_t nonzero = 0;
                    for (uint32_t i = 0; i < p; ++i) {
                        v[positions[i]] = vals[i];
                        nonzero += vals[i] != 0;
                    }
                    const uint32_t chi = ring.char_exponent(ring.inner_product(c, v));
                    within.accumulate(chi, 1);
                    if (nonzero == p) exact.accumulate(chi, 1);
                } while (sub.advance());
                for (uint32_t i = 0; i < p; ++i) v[positions[i]] = 0;

                const auto w = within.as_integer();
                const auto x = exact.as_integer();
                const BigInt want_exact = (p & 1) ? BigInt(-1) : BigInt(1);
                if (subset_ok && (!w || *w != 0 || !x || *x != want_exact)) {
                    subset_ok = false;
                    subset_detail = "c=" + word_string(ring, c) + " subset mask " + std::to_string(mask);
                }
            }
        }
    }

    report.expect("support-classified sums match the signed binomial closed form", support_ok,
                  support_detail);
    report.expect("fixed-support sums vanish and exact-support sums alternate", subset_ok,
                  subset_detail);
    report.expect("full byte transform sum matches its closed form", transform_ok,
                  transform_detail);
    return report;
}

// ---- identity checks -----------------------------------------------------------

std::string identity_kind_name(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::Hamming: return "hamming";
        case IdentityKind::JointDualFirst: return "joint-dual-first";
        case IdentityKind::JointDualSecond: return "joint-dual-second";
        case IdentityKind::JointDualBoth: return "joint-dual-both";
        case IdentityKind::Split: return "split";
        case IdentityKind::Lee: return "lee";
    }
    return "?";
}

VerificationReport check_identity(IdentityKind kind, const LinearCode& c, const LinearCode* d,
                                  const SpottyParams& params, uint64_t budget,
                                  KernelCache& cache) {
    VerificationReport report;
    report.suite = "identity-" + identity_kind_name(kind);
    report.instance = code_string(c) + (d ? " | " + code_string(*d) : "") +
                      " t=" + std::to_string(params.t);

    const uint64_t ell = c.ring().size();
    const BigInt size_c(c.size());

    try {
    switch (kind) {
        case IdentityKind::Hamming: {
            const MultiPoly lhs =
                macwilliams_hamming(alpha_distribution(c), size_c, ell, params, cache);
            const LinearCode dual = dual_brute(c, budget);
            const MultiPoly rhs = hamming_enumerator(dual, params);
            report.expect_eq("transform equals the dual enumerator", rhs.to_text(), lhs.to_text());
            report.expect_eq("transform mass equals the dual size", BigInt(dual.size()).str(),
                             lhs.value_at_ones().str());
            break;
        }
        case IdentityKind::Split: {
            const MultiPoly lhs =
                split_macwilliams(profile_distribution(c), size_c, ell, params, cache);
            const MultiPoly rhs = split_enumerator(dual_brute(c, budget), params);
            report.expect_eq("transform equals the dual enumerator", rhs.to_text(), lhs.to_text());
            break;
        }
        case IdentityKind::Lee: {
            const MultiPoly lhs = lee_macwilliams(composition_distribution(c), size_c, c.ring(),
                                                  params, cache);
            const MultiPoly rhs = lee_enumerator(dual_brute(c, budget), params);
            report.expect_eq("transform equals the dual enumerator", rhs.to_text(), lhs.to_text());
            break;
        }
        case IdentityKind::JointDualFirst:
        case IdentityKind::JointDualSecond:
        case IdentityKind::JointDualBoth: {
            if (!d) throw DomainError("joint identity checks need a second code");
            const JointStats stats = joint_statistics(c, *d, budget);
            const BigInt size_d(d->size());
            JointDual which = kind == IdentityKind::JointDualFirst  ? JointDual::DualFirst
                              : kind == IdentityKind::JointDualSecond ? JointDual::DualSecond
                                                                      : JointDual::DualBoth;
            const MultiPoly lhs =
                joint_macwilliams(which, stats, size_c, size_d, ell, params, cache);
            MultiPoly rhs;
            switch (which) {
                case JointDual::DualFirst:
                    rhs = joint_enumerator(dual_brute(c, budget), *d, params, budget);
                    break;
                case JointDual::DualSecond:
                    rhs = joint_enumerator(c, dual_brute(*d, budget), params, budget);
                    break;
                case JointDual::DualBoth:
                    rhs = joint_enumerator(dual_brute(c, budget), dual_brute(*d, budget), params,
                                           budget);
                    break;
            }
            report.expect_eq("transform equals the dual enumerator", rhs.to_text(), lhs.to_text());
            break;
        }
    }
    } catch (const IntegralityError& e) {
        // a wrong kernel shows up as a failed division before anything compares
        report.expect("transform divisions stay integral", false, e.what());
    }
    return report;
}

VerificationReport check_joint_properties(const LinearCode& c, const LinearCode& d,
                                          const SpottyParams& params, uint64_t pair_budget) {
    VerificationReport report;
    report.suite = "joint-properties";
    report.instance = code_string(c) + " | " + code_string(d) + " t=" + std::to_string(params.t);

    const MultiPoly joint = joint_enumerator(c, d, params, pair_budget);
    const BigInt pairs = BigInt(c.size()) * d.size();
    report.expect_eq("mass equals the pair count", pairs.str(), joint.value_at_ones().str());

    const MultiPoly swapped = joint_enumerator(d, c, params, pair_budget);
    report.expect_eq("argument swap symmetry",
                     joint.evaluate({{Var::x(), Var::y()}, {Var::y(), Var::x()}}).to_text(),
                     swapped.to_text());

    const MultiPoly wc = joint.evaluate({{Var::x(), BigInt(1)}, {Var::y(), Var::z()}})
                             .divided_exact(BigInt(d.size()));
    report.expect_eq("x=1 specialization recovers the first enumerator",
                     hamming_enumerator(c, params).to_text(), wc.to_text());

    const MultiPoly wd = joint.evaluate({{Var::x(), Var::z()}, {Var::y(), BigInt(1)}})
                             .divided_exact(BigInt(c.size()));
    report.expect_eq("y=1 specialization recovers the second enumerator",
                     hamming_enumerator(d, params).to_text(), wd.to_text());
    return report;
}

VerificationReport check_lee_kernel(const Ring& ring, uint32_t b, uint32_t t, uint64_t budget,
                                    KernelCache& cache, size_t samples) {
    if (!ring.is_rk()) throw UnsupportedError("Lee kernel check is defined on R_k only");
    require_budget(ring.size(), b, budget, "Lee kernel check");
    VerificationReport report;
    report.suite = "lee-kernel";
    {
        std::ostringstream os;
        os << "ring=" << ring.describe() << " b=" << b << " t=" << t;
        report.instance = os.str();
    }
    const SpottyParams params(b, t);

    bool ok = true;
    std::string detail;
    size_t checked = 0;

    auto check_byte = [&](const std::vector<Elem>& u) {
        const MultiPoly direct = oracle_lee_kernel(ring, u, params);
        const MultiPoly closed =
            cache.lee_kernel(composition_vector(ring, u, b)[0], ring, t);
        ++checked;
        if (ok && direct != closed) {
            ok = false;
            detail = "u=" + word_string(ring, u) + " direct=" + direct.to_text() +
                     " closed=" + closed.to_text();
        }
    };

    if (samples == 0) {
        VectorScan scan(ring, b);
        do check_byte(scan.current());
        while (scan.advance());
    } else {
        std::mt19937_64 rng(0xc0ffee);
        std::uniform_int_distribution<uint64_t> dist(0, ring.size() - 1);
        for (size_t i = 0; i < samples; ++i) {
            std::vector<Elem> u(b);
            for (auto& x : u) x = static_cast<Elem>(dist(rng));
            check_byte(u);
        }
    }
    report.expect("direct byte sums equal the composition kernel (" + std::to_string(checked) +
                      " bytes)",
                  ok, detail);
    return report;
}

VerificationReport check_duality(const LinearCode& code, uint64_t budget) {
    VerificationReport report;
    report.suite = "duality";
    report.instance = code_string(code);

    const LinearCode dual = dual_brute(code, budget);
    const BigInt ambient = ipow(BigInt(code.ring().size()), code.length());
    report.expect_eq("size product equals the ambient size", ambient.str(),
                     (BigInt(code.size()) * dual.size()).str());

    const LinearCode ddual = dual_brute(dual, budget);
    report.expect("double dual returns the code", ddual.same_codewords(code),
                  "|ddual|=" + std::to_string(ddual.size()));
    return report;
}

// ---- suites -----------------------------------------------------------------------

namespace {

std::vector<RingSpec> ring_pool() {
    return {RingSpec::integers_mod(4), RingSpec::integers_mod(6), RingSpec::prime_field(5),
            RingSpec::chain_ring(2, 2), RingSpec::chain_ring(2, 3), RingSpec::rk(1),
            RingSpec::rk(2)};
}

}  // namespace

std::vector<VerificationReport> run_identity_sweep(const SweepOptions& options,
                                                   KernelCache& cache) {
    std::mt19937_64 rng(options.seed);
    const auto pool = ring_pool();
    std::vector<VerificationReport> reports;

    for (size_t inst = 0; inst < options.instances; ++inst) {
        // draw geometry until the ambient space fits the brute-force cap
        std::shared_ptr<const Ring> ring;
        uint32_t b = 0, n = 0;
        while (true) {
            const RingSpec spec = pool[rng() % pool.size()];
            b = 1 + static_cast<uint32_t>(rng() % 3);
            n = 1 + static_cast<uint32_t>(rng() % 2);
            ring = make_ring(spec);
            if (checked_pow(ring->size(), b * n, options.vector_cap)) break;
        }
        const uint32_t len = b * n;
        const uint32_t t = 1 + static_cast<uint32_t>(rng() % b);
        const SpottyParams params(b, t);
        std::uniform_int_distribution<uint64_t> elem(0, ring->size() - 1);

        const uint32_t gen_count = 1 + static_cast<uint32_t>(rng() % 2);
        std::vector<LinearCode::Word> gens(gen_count, LinearCode::Word(len));
        for (auto& g : gens)
            for (auto& x : g) x = static_cast<Elem>(elem(rng));
        const LinearCode c = span(ring, b, n, gens, options.budget);

        LinearCode::Word dgen(len);
        for (auto& x : dgen) x = static_cast<Elem>(elem(rng));
        const LinearCode d = span(ring, b, n, {dgen}, options.budget);

        const uint64_t ambient = *checked_pow(ring->size(), len, options.vector_cap);
        const uint64_t dual_c = ambient / c.size();
        const uint64_t dual_d = ambient / d.size();

        auto run = [&](IdentityKind kind, const LinearCode* second) {
            VerificationReport r = check_identity(kind, c, second, params, options.budget, cache);
            r.seed = options.seed;
            r.instance += " [instance " + std::to_string(inst) + "]";
            reports.push_back(std::move(r));
        };

        run(IdentityKind::Hamming, nullptr);
        run(IdentityKind::Split, nullptr);
        if (ring->is_rk()) run(IdentityKind::Lee, nullptr);
        if (BigInt(dual_c) * d.size() <= options.pair_cap) run(IdentityKind::JointDualFirst, &d);
        if (BigInt(c.size()) * dual_d <= options.pair_cap) run(IdentityKind::JointDualSecond, &d);
        if (BigInt(dual_c) * dual_d <= options.pair_cap) run(IdentityKind::JointDualBoth, &d);

        {
            VerificationReport r = check_joint_properties(c, d, params, options.budget);
            r.seed = options.seed;
            reports.push_back(std::move(r));
        }
        {
            VerificationReport r = check_duality(c, options.budget);
            r.seed = options.seed;
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

std::vector<VerificationReport> run_lemma_suite(uint64_t seed, uint64_t budget,
                                                KernelCache& cache) {
    std::vector<VerificationReport> reports;

    // ceiling split of a two-part sum, exhaustive over small t
    {
        VerificationReport r;
        r.suite = "ceiling-split";
        r.instance = "t <= 8, addends < 8t";
        bool ok = true;
        std::string detail;
        for (uint32_t t = 1; t <= 8 && ok; ++t) {
            for (uint32_t a = 0; a < 8 * t && ok; ++a) {
                for (uint32_t c = 0; c < 8 * t && ok; ++c) {
                    const uint64_t expected = ceil_div(a + c, t);
                    const uint64_t got = a / t + c / t + ceil_case(a % t + c % t, t);
                    if (expected != got) {
                        ok = false;
                        detail = "t=" + std::to_string(t) + " a=" + std::to_string(a) +
                                 " b=" + std::to_string(c);
                    }
                }
            }
        }
        r.expect("ceiling of a sum splits into floors plus a 0/1/2 case offset", ok, detail);
        reports.push_back(std::move(r));
    }

    // J + L and K + L identities, exhaustive over the smallest R_k
    {
        VerificationReport r;
        r.suite = "jkl-identities";
        r.instance = "rk 1, b <= 3, all byte pairs";
        const auto ring = make_ring(RingSpec::rk(1));
        bool ok = true;
        std::string detail;
        for (uint32_t b = 1; b <= 3 && ok; ++b) {
            for (uint32_t t = 1; t <= b && ok; ++t) {
                const SpottyParams params(b, t);
                VectorScan us(*ring, b);
                do {
                    const auto u = us.current();
                    VectorScan vs(*ring, b);
                    do {
                        const auto& v = vs.current();
                        const JklValues s = jkl(u, v, params);
                        const uint64_t wmu = m_spotty_hamming_weight(u, params);
                        const uint64_t wmv = m_spotty_hamming_weight(v, params);
                        if (s.j + s.l != wmv || s.k + s.l != wmu) {
                            ok = false;
                            detail = "u=" + word_string(*ring, u) + " v=" + word_string(*ring, v) +
                                     " t=" + std::to_string(t);
                        }
                    } while (ok && vs.advance());
                } while (ok && us.advance());
            }
        }
        r.expect("bytewise J+L and K+L recover the m-spotty weights", ok, detail);
        reports.push_back(std::move(r));

        // sampled pairs over larger rings
        VerificationReport r2;
        r2.suite = "jkl-identities";
        r2.instance = "sampled pairs over the ring pool";
        r2.seed = seed;
        std::mt19937_64 rng(seed);
        bool ok2 = true;
        std::string detail2;
        for (const RingSpec& spec : ring_pool()) {
            const auto rg = make_ring(spec);
            std::uniform_int_distribution<uint64_t> elem(0, rg->size() - 1);
            for (uint32_t b = 1; b <= 3 && ok2; ++b) {
                const SpottyParams params(b, 1 + static_cast<uint32_t>(rng() % b));
                for (int rep = 0; rep < 50 && ok2; ++rep) {
                    std::vector<Elem> u(2 * b), v(2 * b);
                    for (auto& x : u) x = static_cast<Elem>(elem(rng));
                    for (auto& x : v) x = static_cast<Elem>(elem(rng));
                    const JklValues s = jkl(u, v, params);
                    if (s.j + s.l != m_spotty_hamming_weight(v, params) ||
                        s.k + s.l != m_spotty_hamming_weight(u, params)) {
                        ok2 = false;
                        detail2 = "ring=" + rg->describe();
                    }
                }
            }
        }
        r2.expect("bytewise J+L and K+L recover the m-spotty weights", ok2, detail2);
        reports.push_back(std::move(r2));
    }

    // character lemmas over the ring pool
    for (const RingSpec& spec : ring_pool()) {
        const auto ring = make_ring(spec);
        for (uint32_t b = 1; b <= 2; ++b)
            for (uint32_t t = 1; t <= b; ++t)
                reports.push_back(check_character_lemmas(*ring, b, t, budget, seed, 20));
    }

    // metric axioms for the m-spotty distances on random triples
    {
        VerificationReport r;
        r.suite = "metric-axioms";
        r.instance = "random triples over the ring pool";
        r.seed = seed;
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
        bool ok = true;
        std::string detail;
        for (const RingSpec& spec : ring_pool()) {
            const auto ring = make_ring(spec);
            std::uniform_int_distribution<uint64_t> elem(0, ring->size() - 1);
            const uint32_t b = 2, n = 2;
            const SpottyParams params(b, 2);
            for (int rep = 0; rep < 100 && ok; ++rep) {
                std::vector<Elem> u(b * n), v(b * n), w(b * n);
                for (auto& x : u) x = static_cast<Elem>(elem(rng));
                for (auto& x : v) x = static_cast<Elem>(elem(rng));
                for (auto& x : w) x = static_cast<Elem>(elem(rng));
                const uint64_t duv = m_spotty_distance(u, v, params);
                const uint64_t dvu = m_spotty_distance(v, u, params);
                const uint64_t duw = m_spotty_distance(u, w, params);
                const uint64_t dwv = m_spotty_distance(w, v, params);
                bool good = duv == dvu && duv <= duw + dwv && (duv == 0) == (u == v) &&
                            m_spotty_distance(u, u, params) == 0;
                if (good && ring->is_rk()) {
                    const uint64_t l_uv = m_spotty_lee_distance(*ring, u, v, params);
                    const uint64_t l_vu = m_spotty_lee_distance(*ring, v, u, params);
                    const uint64_t l_uw = m_spotty_lee_distance(*ring, u, w, params);
                    const uint64_t l_wv = m_spotty_lee_distance(*ring, w, v, params);
                    good = l_uv == l_vu && l_uv <= l_uw + l_wv && (l_uv == 0) == (u == v);
                }
                if (!good) {
                    ok = false;
                    detail = "ring=" + ring->describe();
                }
            }
        }
        r.expect("m-spotty distances satisfy the metric axioms", ok, detail);
        reports.push_back(std::move(r));
    }

    // joint enumerator properties on fixed small pairs
    {
        const auto z4 = make_ring(RingSpec::integers_mod(4));
        const LinearCode c = span(z4, 1, 2, {{1, 1}}, budget);
        const LinearCode d = span(z4, 1, 2, {{1, 2}}, budget);
        reports.push_back(check_joint_properties(c, d, SpottyParams(1, 1), budget));

        const auto r1 = make_ring(RingSpec::rk(1));
        const LinearCode c2 = span(r1, 2, 2, {{1, 2, 0, 1}, {0, 0, 2, 2}}, budget);
        const LinearCode d2 = span(r1, 2, 2, {{2, 1, 1, 0}}, budget);
        reports.push_back(check_joint_properties(c2, d2, SpottyParams(2, 2), budget));
    }

    // closed-form joint kernels against the brute-force double sums
    {
        VerificationReport r;
        r.suite = "joint-kernels";
        r.instance = "zmod 4 and rk 1, b <= 3, all weight/overlap shapes";
        bool ok = true;
        std::string detail;
        for (const RingSpec& spec : {RingSpec::integers_mod(4), RingSpec::rk(1)}) {
            const auto ring = make_ring(spec);
            for (uint32_t b = 1; b <= 3 && ok; ++b) {
                for (uint32_t t = 1; t <= b && ok; ++t) {
                    const SpottyParams params(b, t);
                    for (uint32_t wu = 0; wu <= b && ok; ++wu) {
                        for (uint32_t wv = 0; wv <= b && ok; ++wv) {
                            const uint32_t lo = wu + wv > b ? wu + wv - b : 0;
                            for (uint32_t ov = lo; ov <= std::min(wu, wv) && ok; ++ov) {
                                // representative bytes: overlap first, then the rest
                                std::vector<Elem> u(b, 0), v(b, 0);
                                for (uint32_t i = 0; i < ov; ++i) u[i] = v[i] = 1;
                                for (uint32_t i = ov; i < wu; ++i) u[i] = 1;
                                for (uint32_t i = 0; i + ov < wv; ++i) v[wu + i] = 1;
                                const MultiPoly g_direct = oracle_g_kernel(*ring, u, v, params);
                                const MultiPoly& g_closed =
                                    cache.g_kernel(wu, wv, ov, b, ring->size(), t);
                                const MultiPoly h_direct = oracle_h_kernel(*ring, u, v, params);
                                const MultiPoly& h_closed =
                                    cache.h_kernel(wu, wv, ov, b, ring->size(), t);
                                if (g_direct != g_closed || h_direct != h_closed) {
                                    ok = false;
                                    detail = "ring=" + ring->describe() + " b=" +
                                             std::to_string(b) + " wu=" + std::to_string(wu) +
                                             " wv=" + std::to_string(wv) +
                                             " ov=" + std::to_string(ov);
                                }
                            }
                        }
                    }
                }
            }
        }
        r.expect("joint kernel closed forms equal the brute-force character sums", ok, detail);
        reports.push_back(std::move(r));
    }

    // Lee kernel equality, exhaustive over small R_k byte spaces
    for (uint32_t b = 1; b <= 3; ++b) {
        const auto r1 = make_ring(RingSpec::rk(1));
        for (uint32_t t = 1; t <= b; ++t)
            reports.push_back(check_lee_kernel(*r1, b, t, budget, cache));
    }
    for (uint32_t b = 1; b <= 3; ++b) {
        const auto r2 = make_ring(RingSpec::rk(2));
        for (uint32_t t = 1; t <= b; ++t)
            reports.push_back(check_lee_kernel(*r2, b, t, budget, cache));
    }

    // duality on fixed instances across the families
    {
        const auto z4 = make_ring(RingSpec::integers_mod(4));
        reports.push_back(check_duality(span(z4, 1, 2, {{1, 1}}, budget), budget));
        reports.push_back(check_duality(span(z4, 1, 1, {{1}}, budget), budget));  // full space
        reports.push_back(check_duality(span(z4, 1, 1, {}, budget), budget));     // zero code

        const auto z6 = make_ring(RingSpec::integers_mod(6));
        reports.push_back(check_duality(span(z6, 1, 2, {{2, 3}}, budget), budget));

        const auto ch = make_ring(RingSpec::chain_ring(2, 3));
        std::mt19937_64 rng(seed ^ 0xfeedface);
        std::uniform_int_distribution<uint64_t> elem(0, ch->size() - 1);
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<Elem> g1(4), g2(4);
            for (auto& x : g1) x = static_cast<Elem>(elem(rng));
            for (auto& x : g2) x = static_cast<Elem>(elem(rng));
            reports.push_back(check_duality(span(ch, 2, 2, {g1, g2}, budget), budget));
        }

        const auto r2ring = make_ring(RingSpec::rk(2));
        reports.push_back(check_duality(span(r2ring, 3, 1, {{1, 2, 8}}, budget), budget));
    }

    return reports;
}

}  // namespace mspotty
