#include <doctest.h>

#include <sstream>

#include "mspotty/verify.hpp"

#include <json.hpp>

using namespace mspotty;

namespace {

std::vector<Elem> word(const Ring& ring, const std::string& text) {
    std::vector<Elem> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(ring.parse_element(tok));
    return out;
}

}  // namespace

TEST_CASE("kernel oracles agree with the closed forms") {
    KernelCache cache;
    for (const RingSpec& spec : {RingSpec::integers_mod(4), RingSpec::integers_mod(6),
                                 RingSpec::rk(1), RingSpec::chain_ring(2, 2)}) {
        const auto ring = make_ring(spec);
        for (uint32_t b = 1; b <= 2; ++b) {
            for (uint32_t t = 1; t <= b; ++t) {
                const SpottyParams params(b, t);
                // representative byte of each weight
                for (uint32_t wc = 0; wc <= b; ++wc) {
                    std::vector<Elem> c(b, 0);
                    for (uint32_t i = 0; i < wc; ++i) c[i] = 1;
                    CHECK(oracle_hamming_kernel(*ring, c, params) ==
                          cache.theta(wc, b, ring->size(), t));
                    CHECK(oracle_split_kernel(*ring, c, params) ==
                          cache.split_kernel(wc, b, ring->size(), t));
                }
                // byte pairs across every weight/overlap shape
                for (uint32_t wu = 0; wu <= b; ++wu) {
                    for (uint32_t wv = 0; wv <= b; ++wv) {
                        const uint32_t lo = wu + wv > b ? wu + wv - b : 0;
                        for (uint32_t ov = lo; ov <= std::min(wu, wv); ++ov) {
                            std::vector<Elem> u(b, 0), v(b, 0);
                            for (uint32_t i = 0; i < ov; ++i) u[i] = v[i] = 1;
                            for (uint32_t i = ov; i < wu; ++i) u[i] = 1;
                            for (uint32_t i = 0; i + ov < wv; ++i) v[wu + i] = 1;
                            CHECK(oracle_g_kernel(*ring, u, v, params) ==
                                  cache.g_kernel(wu, wv, ov, b, ring->size(), t));
                            CHECK(oracle_h_kernel(*ring, u, v, params) ==
                                  cache.h_kernel(wu, wv, ov, b, ring->size(), t));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("kernel oracles are value-independent") {
    // the closed forms depend only on weights and overlap, whatever the
    // nonzero entries are
    KernelCache cache;
    const auto z6 = make_ring(RingSpec::integers_mod(6));
    const SpottyParams params(2, 1);
    const std::vector<Elem> u{3, 5}, v{2, 0};
    CHECK(oracle_g_kernel(*z6, u, v, params) == cache.g_kernel(2, 1, 1, 2, 6, 1));
    const std::vector<Elem> u2{4, 0}, v2{5, 3};
    CHECK(oracle_g_kernel(*z6, u2, v2, params) == cache.g_kernel(1, 2, 1, 2, 6, 1));
}

TEST_CASE("character lemma checker") {
    for (const RingSpec& spec : {RingSpec::integers_mod(6), RingSpec::rk(2),
                                 RingSpec::chain_ring(2, 3), RingSpec::prime_field(5)}) {
        const auto ring = make_ring(spec);
        const VerificationReport report = check_character_lemmas(*ring, 2, 2, kDefaultBudget, 1, 10);
        CHECK(report.all_pass());
    }
    const auto big = make_ring(RingSpec::integers_mod(7));
    CHECK_THROWS_AS(check_character_lemmas(*big, 30, 1, 1000, 1, 1), BudgetError);
}

TEST_CASE("identity checker on the published small example") {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode c = span(z4, 2, 1, {{1, 1}});
    KernelCache cache;
    const VerificationReport r = check_identity(IdentityKind::Hamming, c, nullptr,
                                                SpottyParams(2, 1), kDefaultBudget, cache);
    CHECK(r.all_pass());
}

TEST_CASE("identity checker covers all six kinds on a two-generator instance") {
    const auto r1 = make_ring(RingSpec::rk(1));
    const LinearCode c = span(r1, 2, 2, {word(*r1, "1 u 0 1")});
    const LinearCode d = span(r1, 2, 2, {word(*r1, "u 0 1 1+u")});
    KernelCache cache;
    for (uint32_t t = 1; t <= 2; ++t) {
        const SpottyParams params(2, t);
        for (IdentityKind kind : {IdentityKind::Hamming, IdentityKind::Split, IdentityKind::Lee}) {
            const VerificationReport r =
                check_identity(kind, c, nullptr, params, kDefaultBudget, cache);
            CHECK(r.all_pass());
        }
        for (IdentityKind kind : {IdentityKind::JointDualFirst, IdentityKind::JointDualSecond,
                                  IdentityKind::JointDualBoth}) {
            const VerificationReport r = check_identity(kind, c, &d, params, kDefaultBudget, cache);
            CHECK(r.all_pass());
        }
    }
}

TEST_CASE("identities hold beyond the sweep pool") {
    KernelCache cache;

    // chain ring with odd characteristic: characters of order 3
    const auto ch32 = make_ring(RingSpec::chain_ring(3, 2));
    const LinearCode c1 = span(ch32, 2, 1, {word(*ch32, "1 u")});
    for (IdentityKind kind : {IdentityKind::Hamming, IdentityKind::Split}) {
        CHECK(check_identity(kind, c1, nullptr, SpottyParams(2, 2), kDefaultBudget, cache)
                  .all_pass());
    }
    CHECK(check_character_lemmas(*ch32, 2, 1, kDefaultBudget, 3, 10).all_pass());

    // composite moduli beyond 6
    const auto z8 = make_ring(RingSpec::integers_mod(8));
    const LinearCode c2 = span(z8, 2, 1, {{2, 6}});
    CHECK(check_identity(IdentityKind::Hamming, c2, nullptr, SpottyParams(2, 1), kDefaultBudget,
                         cache)
              .all_pass());
    const auto z12 = make_ring(RingSpec::integers_mod(12));
    const LinearCode c3 = span(z12, 1, 2, {{3, 4}});
    for (IdentityKind kind : {IdentityKind::Hamming, IdentityKind::Split}) {
        CHECK(check_identity(kind, c3, nullptr, SpottyParams(1, 1), kDefaultBudget, cache)
                  .all_pass());
    }
    CHECK(check_duality(c3, kDefaultBudget).all_pass());

    // the next ring in the R_k family
    const auto r3 = make_ring(RingSpec::rk(3));
    const LinearCode c4 = span(r3, 2, 1, {word(*r3, "u1 u2u3")});
    for (IdentityKind kind : {IdentityKind::Hamming, IdentityKind::Lee}) {
        CHECK(check_identity(kind, c4, nullptr, SpottyParams(2, 2), kDefaultBudget, cache)
                  .all_pass());
    }
}

TEST_CASE("negative control: a poisoned kernel fails with a counterexample") {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode c = span(z4, 1, 2, {{1, 1}});
    KernelCache cache;
    MultiPoly bogus;
    bogus.add_term({}, 1);
    bogus.add_term({{Var::z(), 1}}, 3);
    cache.inject_theta(1, 1, 4, 1, bogus);
    const VerificationReport r = check_identity(IdentityKind::Hamming, c, nullptr,
                                                SpottyParams(1, 1), kDefaultBudget, cache);
    CHECK(!r.all_pass());
    CHECK(r.failures() >= 1);
    // the report carries the mismatching polynomials
    bool found = false;
    for (const Assertion& a : r.assertions)
        if (!a.pass && !a.expected.empty() && a.expected != a.actual) found = true;
    CHECK(found);

    std::ostringstream os;
    r.write_json_lines(os);
    const std::string lines = os.str();
    CHECK(lines.find("\"pass\":false") != std::string::npos);
    CHECK(lines.find("expected") != std::string::npos);
    // one JSON object per line, each parseable
    std::istringstream is(lines);
    std::string line;
    while (std::getline(is, line)) CHECK_NOTHROW(nlohmann::json::parse(line));
}

TEST_CASE("joint properties checker") {
    const auto ch = make_ring(RingSpec::chain_ring(2, 2));
    const LinearCode c = span(ch, 2, 1, {word(*ch, "1 u")});
    const LinearCode d = span(ch, 2, 1, {word(*ch, "u 1+u")});
    CHECK(check_joint_properties(c, d, SpottyParams(2, 2), kDefaultBudget).all_pass());
}

TEST_CASE("lee kernel checker") {
    KernelCache cache;
    const auto r1 = make_ring(RingSpec::rk(1));
    CHECK(check_lee_kernel(*r1, 2, 1, kDefaultBudget, cache).all_pass());
    CHECK(check_lee_kernel(*r1, 2, 2, kDefaultBudget, cache).all_pass());
    const auto r2 = make_ring(RingSpec::rk(2));
    CHECK(check_lee_kernel(*r2, 2, 2, kDefaultBudget, cache).all_pass());
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    CHECK_THROWS_AS(check_lee_kernel(*z4, 2, 1, kDefaultBudget, cache), UnsupportedError);
}

TEST_CASE("duality checker") {
    const auto z6 = make_ring(RingSpec::integers_mod(6));
    CHECK(check_duality(span(z6, 1, 2, {{2, 3}}), kDefaultBudget).all_pass());
    const auto r2 = make_ring(RingSpec::rk(2));
    CHECK(check_duality(span(r2, 3, 1, {word(*r2, "1 u uv")}), kDefaultBudget).all_pass());
}

TEST_CASE("small identity sweep is deterministic and green") {
    KernelCache cache;
    SweepOptions options;
    options.seed = 123;
    options.instances = 8;
    const auto reports = run_identity_sweep(options, cache);
    CHECK(reports.size() >= options.instances);
    for (const auto& r : reports) CHECK(r.all_pass());

    const auto again = run_identity_sweep(options, cache);
    REQUIRE(again.size() == reports.size());
    for (size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].instance == reports[i].instance);
        CHECK(again[i].assertions.size() == reports[i].assertions.size());
    }
}
