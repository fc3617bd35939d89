#include <doctest.h>

#include <sstream>

#include "mspotty/enumerators.hpp"
#include "mspotty/verify.hpp"

using namespace mspotty;

namespace {

std::vector<Elem> word(const Ring& ring, const std::string& text) {
    std::vector<Elem> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) out.push_back(ring.parse_element(tok));
    return out;
}

MultiPoly zpoly(const std::vector<std::pair<int64_t, uint32_t>>& terms) {
    MultiPoly p;
    for (const auto& [c, e] : terms) {
        Monomial m;
        if (e) m.emplace_back(Var::z(), e);
        p.add_term(std::move(m), c);
    }
    return p;
}

// the 256-word length-6 code over rk 2 used across these tests
LinearCode big_code(const std::shared_ptr<const Ring>& r2) {
    return span(r2, 3, 2,
                {word(*r2, "1 0 0 u v 1+u"), word(*r2, "0 u 0 u+v uv u"),
                 word(*r2, "uv 0 uv uv 0 uv")});
}

// the 32-word length-9 code and its 2-word partner
LinearCode pair_code_c(const std::shared_ptr<const Ring>& r2) {
    return span(r2, 3, 3, {word(*r2, "1 0 0 u v 1 0 0 u"), word(*r2, "0 0 uv uv 0 0 0 uv uv")});
}

LinearCode pair_code_d(const std::shared_ptr<const Ring>& r2) {
    return span(r2, 3, 3, {word(*r2, "uv 0 uv 0 uv 0 0 0 uv")});
}

}  // namespace

TEST_CASE("theta kernels at b=3 ell=16 t=2") {
    KernelCache cache;
    CHECK(cache.theta(0, 3, 16, 2) == zpoly({{1, 0}, {720, 1}, {3375, 2}}));
    CHECK(cache.theta(1, 3, 16, 2) == zpoly({{1, 0}, {224, 1}, {-225, 2}}));
    CHECK(cache.theta(2, 3, 16, 2) == zpoly({{1, 0}, {-16, 1}, {15, 2}}));
    CHECK(cache.theta(3, 3, 16, 2) == zpoly({{1, 0}, {-1, 2}}));
}

TEST_CASE("theta reduces to the classical kernel at t=1") {
    KernelCache cache;
    // (1-z)^j (1+(ell-1)z)^{b-j}
    const MultiPoly one_minus = zpoly({{1, 0}, {-1, 1}});
    const MultiPoly rest = zpoly({{1, 0}, {3, 1}});
    MultiPoly expected = one_minus * rest;  // j=1, b=2, ell=4
    CHECK(cache.theta(1, 2, 4, 1) == expected);
}

TEST_CASE("hamming enumerator") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode zero = span(r2, 3, 2, {});
    CHECK(hamming_enumerator(zero, SpottyParams(3, 2)) == MultiPoly::constant(1));

    const LinearCode c = big_code(r2);
    CHECK(c.size() == 256);
    const MultiPoly w = hamming_enumerator(c, SpottyParams(3, 2));
    CHECK(w == zpoly({{1, 0}, {3, 1}, {51, 2}, {137, 3}, {64, 4}}));
    CHECK(w.value_at_ones() == 256);
    CHECK(w.degree() <= 2 * ceil_div(3, 2));
}

TEST_CASE("hamming transform on the 256-word code") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode c = big_code(r2);
    KernelCache cache;
    const MultiPoly dual = macwilliams_hamming(alpha_distribution(c), BigInt(c.size()), 16,
                                               SpottyParams(3, 2), cache);
    CHECK(dual == zpoly({{1, 0}, {60, 1}, {4014, 2}, {21932, 3}, {39529, 4}}));
    CHECK(dual.value_at_ones() == 65536);
}

TEST_CASE("hamming transform of the full space is trivial") {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode full = span(z4, 1, 1, {{1}});
    KernelCache cache;
    CHECK(macwilliams_hamming(alpha_distribution(full), BigInt(4), 4, SpottyParams(1, 1),
                              cache) == MultiPoly::constant(1));
}

TEST_CASE("hamming transform matches brute force and involutes") {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode c = span(z4, 1, 2, {{1, 1}});
    KernelCache cache;
    const SpottyParams params(1, 1);
    const MultiPoly lhs = macwilliams_hamming(alpha_distribution(c), BigInt(c.size()), 4,
                                              params, cache);
    const LinearCode dual = dual_brute(c);
    CHECK(lhs == hamming_enumerator(dual, params));

    const MultiPoly back = macwilliams_hamming(alpha_distribution(dual), BigInt(dual.size()), 4,
                                               params, cache);
    CHECK(back == hamming_enumerator(c, params));
}

TEST_CASE("joint enumerator properties") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode c = pair_code_c(r2), d = pair_code_d(r2);
    const SpottyParams params(3, 2);
    const MultiPoly joint = joint_enumerator(c, d, params);
    CHECK(joint.value_at_ones() == BigInt(c.size()) * d.size());
    CHECK(joint_enumerator(d, c, params) ==
          joint.evaluate({{Var::x(), Var::y()}, {Var::y(), Var::x()}}));
    CHECK(joint.evaluate({{Var::x(), BigInt(1)}, {Var::y(), Var::z()}})
              .divided_exact(BigInt(d.size())) == hamming_enumerator(c, params));
    CHECK(joint.evaluate({{Var::x(), Var::z()}, {Var::y(), BigInt(1)}})
              .divided_exact(BigInt(c.size())) == hamming_enumerator(d, params));
}

TEST_CASE("joint enumerator respects the pair budget") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode c = pair_code_c(r2), d = pair_code_d(r2);
    CHECK_THROWS_AS(joint_enumerator(c, d, SpottyParams(3, 2), 63), BudgetError);
    CHECK_NOTHROW(joint_enumerator(c, d, SpottyParams(3, 2), 64));
}

TEST_CASE("g kernels at b=3 ell=16 t=2") {
    KernelCache cache;
    auto xyz = [](const std::vector<std::tuple<int64_t, uint32_t, uint32_t, uint32_t>>& terms) {
        MultiPoly p;
        for (const auto& [c, xe, ye, ze] : terms) {
            Monomial m;
            if (ze) m.emplace_back(Var::z(), ze);
            if (xe) m.emplace_back(Var::x(), xe);
            if (ye) m.emplace_back(Var::y(), ye);
            std::sort(m.begin(), m.end());
            p.add_term(std::move(m), c);
        }
        return p;
    };

    CHECK(cache.g_kernel(0, 0, 0, 3, 16, 2) == xyz({{1, 0, 0, 0}, {720, 0, 1, 0}, {3375, 0, 2, 0}}));
    CHECK(cache.g_kernel(0, 1, 0, 3, 16, 2) ==
          xyz({{1, 1, 0, 0}, {720, 1, 1, 0}, {3375, 1, 2, 0}}));
    CHECK(cache.g_kernel(0, 2, 0, 3, 16, 2) ==
          xyz({{1, 1, 0, 0}, {495, 1, 1, 0}, {225, 0, 0, 1}, {3375, 0, 1, 1}}));
    CHECK(cache.g_kernel(1, 0, 0, 3, 16, 2) ==
          xyz({{1, 0, 0, 0}, {224, 0, 1, 0}, {-225, 0, 2, 0}}));
    CHECK(cache.g_kernel(1, 1, 0, 3, 16, 2) ==
          xyz({{1, 1, 0, 0}, {224, 1, 1, 0}, {-225, 1, 2, 0}}));
    CHECK(cache.g_kernel(1, 1, 1, 3, 16, 2) == cache.g_kernel(1, 1, 0, 3, 16, 2));
    CHECK(cache.g_kernel(1, 2, 1, 3, 16, 2) ==
          xyz({{1, 1, 0, 0}, {239, 1, 1, 0}, {-225, 0, 1, 1}, {-15, 0, 0, 1}}));
    CHECK(cache.g_kernel(2, 0, 0, 3, 16, 2) ==
          xyz({{1, 0, 0, 0}, {-16, 0, 1, 0}, {15, 0, 2, 0}}));
    CHECK(cache.g_kernel(2, 1, 0, 3, 16, 2) ==
          xyz({{1, 1, 0, 0}, {-16, 1, 1, 0}, {15, 1, 2, 0}}));
    CHECK(cache.g_kernel(2, 1, 1, 3, 16, 2) == cache.g_kernel(2, 1, 0, 3, 16, 2));
    CHECK(cache.g_kernel(2, 2, 2, 3, 16, 2) ==
          xyz({{1, 1, 0, 0}, {1, 0, 0, 1}, {15, 0, 1, 1}, {-17, 1, 1, 0}}));
    CHECK(cache.g_kernel(3, 0, 0, 3, 16, 2) == xyz({{1, 0, 0, 0}, {-1, 0, 2, 0}}));
    CHECK(cache.g_kernel(3, 1, 1, 3, 16, 2) == xyz({{1, 1, 0, 0}, {-1, 1, 2, 0}}));

    CHECK_THROWS_AS(cache.g_kernel(3, 1, 0, 3, 16, 2), DomainError);  // overlap below range
    CHECK_THROWS_AS(cache.g_kernel(1, 2, 2, 3, 16, 2), DomainError);
}

TEST_CASE("joint transform reproduces the published pair result") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode c = pair_code_c(r2), d = pair_code_d(r2);
    const JointStats stats = joint_statistics(c, d);
    CHECK(stats.total() == 64);
    KernelCache cache;
    const MultiPoly j =
        joint_macwilliams(JointDual::DualFirst, stats, BigInt(c.size()), BigInt(d.size()), 16,
                          SpottyParams(3, 2), cache);
    CHECK(j.value_at_ones() == BigInt("4294967296"));
    const MultiPoly expected = MultiPoly::parse_text(
        "1 + 370 y + 91851 y^2 + x^3 + 12989596 y^3 + 7715 z x^2 y + 370 x^3 y + 167950055 y^4 "
        "+ 3748010 z x^2 y^2 + 84136 x^3 y^2 + 760369650 y^5 + 88403600 z x^2 y^3 "
        "+ 9241586 x^3 y^3 + 1206082125 y^6 + 589195350 z x^2 y^4 + 79546455 x^3 y^4 "
        "+ 1206082125 z x^2 y^5 + 171174300 x^3 y^5");
    CHECK(j == expected);
}

TEST_CASE("joint transform specializations connect to the hamming transform") {
    // the transformed pair enumerator must satisfy the same specialization
    // identities as any joint enumerator, now for the pair (C-dual, D)
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode c = pair_code_c(r2), d = pair_code_d(r2);
    const SpottyParams params(3, 2);
    KernelCache cache;
    const MultiPoly j = joint_macwilliams(JointDual::DualFirst, joint_statistics(c, d),
                                          BigInt(c.size()), BigInt(d.size()), 16, params, cache);
    const BigInt dual_size = ipow(BigInt(16), 9) / c.size();

    // x=1, y=z recovers the dual hamming enumerator of C
    CHECK(j.evaluate({{Var::x(), BigInt(1)}, {Var::y(), Var::z()}})
              .divided_exact(BigInt(d.size())) ==
          macwilliams_hamming(alpha_distribution(c), BigInt(c.size()), 16, params, cache));

    // x=z, y=1 recovers the plain enumerator of D scaled by the dual size
    CHECK(j.evaluate({{Var::x(), Var::z()}, {Var::y(), BigInt(1)}}).divided_exact(dual_size) ==
          hamming_enumerator(d, params));
}

TEST_CASE("joint transform with a zero second code degenerates to the hamming transform") {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode c = span(z4, 2, 1, {{1, 1}});
    const LinearCode zero = span(z4, 2, 1, {});
    const SpottyParams params(2, 2);
    KernelCache cache;
    const MultiPoly j = joint_macwilliams(JointDual::DualFirst, joint_statistics(c, zero),
                                          BigInt(c.size()), BigInt(1), 4, params, cache);
    const MultiPoly w = macwilliams_hamming(alpha_distribution(c), BigInt(c.size()), 4, params,
                                            cache);
    CHECK(j == w.evaluate({{Var::z(), Var::y()}}));
}

TEST_CASE("h kernel evaluations") {
    KernelCache cache;
    CHECK(cache.h_kernel(0, 0, 0, 1, 4, 1).value_at_ones() == 16);
    for (uint32_t b = 1; b <= 2; ++b)
        for (uint32_t t = 1; t <= b; ++t) {
            const uint32_t lo = 2 > b ? 2 - b : 0;
            for (uint32_t ov = lo; ov <= 1; ++ov)
                CHECK(cache.h_kernel(1, 1, ov, b, 4, t).value_at_ones() == 0);
        }
}

TEST_CASE("krawtchouk values") {
    for (uint32_t j = 0; j <= 3; ++j) CHECK(krawtchouk(0, j, 3, 16) == 1);
    CHECK(krawtchouk(1, 1, 3, 16) == 29);
    CHECK(krawtchouk(3, 1, 3, 16) == -225);
    CHECK(krawtchouk(2, 1, 3, 16) == 195);
}

TEST_CASE("split kernels at b=3 ell=16 t=2") {
    KernelCache cache;
    auto xy = [](int64_t cx2, int64_t cxy, int64_t cy2) {
        MultiPoly p;
        p.add_term({{Var::x(), 2}}, cx2);
        p.add_term({{Var::x(), 1}, {Var::y(), 1}}, cxy);
        p.add_term({{Var::y(), 2}}, cy2);
        return p;
    };
    CHECK(cache.split_kernel(0, 3, 16, 2) == xy(1, 720, 3375));
    CHECK(cache.split_kernel(1, 3, 16, 2) == xy(1, 224, -225));
    CHECK(cache.split_kernel(2, 3, 16, 2) == xy(1, -16, 15));
    CHECK(cache.split_kernel(3, 3, 16, 2) == xy(1, 0, -1));
}

TEST_CASE("split enumerator") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode zero = span(r2, 3, 2, {});
    const SpottyParams params(3, 2);
    MultiPoly xmono;
    xmono.add_term({{Var::xi(1), 2}, {Var::xi(2), 2}}, 1);
    CHECK(split_enumerator(zero, params) == xmono);

    const LinearCode c = big_code(r2);
    const MultiPoly s = split_enumerator(c, params);
    CHECK(s.value_at_ones() == 256);

    // substituting x_i = 1, y_i = z collapses to the hamming enumerator
    MultiPoly::Subst sub;
    for (uint32_t i = 1; i <= 2; ++i) {
        sub[Var::xi(i)] = BigInt(1);
        sub[Var::yi(i)] = Var::z();
    }
    CHECK(s.evaluate(sub) == hamming_enumerator(c, params));
}

TEST_CASE("split transform of the single-byte zero code") {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode zero = span(z4, 1, 1, {});
    KernelCache cache;
    const MultiPoly s = split_macwilliams(profile_distribution(zero), BigInt(1), 4,
                                          SpottyParams(1, 1), cache);
    MultiPoly expected;
    expected.add_term({{Var::xi(1), 1}}, 1);
    expected.add_term({{Var::yi(1), 1}}, 3);
    CHECK(s == expected);
}

TEST_CASE("split transform agrees with the hamming transform under specialization") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode c = pair_code_c(r2);
    const SpottyParams params(3, 2);
    KernelCache cache;
    const MultiPoly s = split_macwilliams(profile_distribution(c), BigInt(c.size()), 16, params,
                                          cache);
    MultiPoly::Subst sub;
    for (uint32_t i = 1; i <= 3; ++i) {
        sub[Var::xi(i)] = BigInt(1);
        sub[Var::yi(i)] = Var::z();
    }
    CHECK(s.evaluate(sub) ==
          macwilliams_hamming(alpha_distribution(c), BigInt(c.size()), 16, params, cache));
}

TEST_CASE("combine") {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode c = span(z4, 1, 2, {{1, 1}});
    const LinearCode d = span(z4, 1, 2, {{0, 2}});
    const SpottyParams params(1, 1);

    const LinearCode sum = combine(CombineKind::DirectSum, c, d);
    CHECK(sum.size() == c.size() * d.size());
    CHECK(hamming_enumerator(sum, params) ==
          hamming_enumerator(c, params) * hamming_enumerator(d, params));

    // split enumerator of the direct sum is the product over shifted variables
    MultiPoly::Subst shift;
    for (uint32_t i = 1; i <= 2; ++i) {
        shift[Var::xi(i)] = Var::xi(i + 2);
        shift[Var::yi(i)] = Var::yi(i + 2);
    }
    CHECK(split_enumerator(sum, params) ==
          split_enumerator(c, params) * split_enumerator(d, params).evaluate(shift));

    const LinearCode par = combine(CombineKind::ParallelConcat, c, d);
    CHECK(par.size() == c.size() * d.size());
    CHECK(hamming_enumerator(par, params) ==
          hamming_enumerator(c, params) * hamming_enumerator(d, params));

    // halves interleave: byte blocks map to 1, 3 for c and 2, 4 for d
    MultiPoly::Subst cmap, dmap;
    cmap[Var::xi(2)] = Var::xi(3);
    cmap[Var::yi(2)] = Var::yi(3);
    dmap[Var::xi(1)] = Var::xi(2);
    dmap[Var::yi(1)] = Var::yi(2);
    dmap[Var::xi(2)] = Var::xi(4);
    dmap[Var::yi(2)] = Var::yi(4);
    CHECK(split_enumerator(par, params) ==
          split_enumerator(c, params).evaluate(cmap) *
              split_enumerator(d, params).evaluate(dmap));

    const LinearCode odd = span(z4, 1, 1, {{1}});
    CHECK_THROWS_AS(combine(CombineKind::ParallelConcat, odd, odd), DomainError);
}

TEST_CASE("lee enumerator") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode zero = span(r2, 3, 3, {});
    CHECK(lee_enumerator(zero, SpottyParams(3, 2)) == MultiPoly::constant(1));

    const LinearCode d = span(r2, 3, 3, {word(*r2, "0 0 uv uv 0 0 0 uv uv")});
    CHECK(lee_enumerator(d, SpottyParams(3, 2)) == zpoly({{1, 0}, {1, 8}}));
    CHECK(lee_enumerator(d, SpottyParams(3, 2)).value_at_ones() == BigInt(d.size()));

    const auto z4 = make_ring(RingSpec::integers_mod(4));
    CHECK_THROWS_AS(lee_enumerator(span(z4, 1, 1, {}), SpottyParams(1, 1)), UnsupportedError);
}

TEST_CASE("lee kernels over rk 2 at t=2") {
    const auto r2 = make_ring(RingSpec::rk(2));
    KernelCache cache;
    auto comp_of = [&](const std::string& byte) {
        return composition_vector(*r2, word(*r2, byte), 3)[0];
    };
    CHECK(cache.lee_kernel(comp_of("0 0 0"), *r2, 2) ==
          zpoly({{1, 0}, {78, 1}, {715, 2}, {1716, 3}, {1287, 4}, {286, 5}, {13, 6}}));
    CHECK(cache.lee_kernel(comp_of("0 0 uv"), *r2, 2) ==
          zpoly({{1, 0}, {6, 1}, {-29, 2}, {36, 3}, {-9, 4}, {-10, 5}, {5, 6}}));
    CHECK(cache.lee_kernel(comp_of("0 uv uv"), *r2, 2) ==
          zpoly({{1, 0}, {-2, 1}, {-5, 2}, {20, 3}, {-25, 4}, {14, 5}, {-3, 6}}));
    CHECK(cache.lee_kernel(comp_of("u 0 0"), *r2, 2) ==
          zpoly({{1, 0}, {34, 1}, {55, 2}, {-132, 3}, {-33, 4}, {66, 5}, {9, 6}}));
    CHECK(cache.lee_kernel(comp_of("0 uv u"), *r2, 2) ==
          zpoly({{1, 0}, {-6, 1}, {15, 2}, {-20, 3}, {15, 4}, {-6, 5}, {1, 6}}));
    CHECK(cache.lee_kernel(comp_of("1 0 0"), *r2, 2) ==
          zpoly({{1, 0}, {54, 1}, {275, 2}, {132, 3}, {-297, 4}, {-154, 5}, {-11, 6}}));

    // kernels depend on the byte only through its composition
    CHECK(cache.lee_kernel(comp_of("uv 0 0"), *r2, 2) == cache.lee_kernel(comp_of("0 0 uv"), *r2, 2));

    // any nonzero-byte composition sums to zero at z=1
    CHECK(cache.lee_kernel(comp_of("0 0 uv"), *r2, 2).value_at_ones() == 0);
    CHECK(cache.lee_kernel(comp_of("0 0 0"), *r2, 2).value_at_ones() == ipow(BigInt(16), 3));
}

TEST_CASE("lee transform reproduces the published dual enumerator") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const LinearCode c = pair_code_c(r2);
    KernelCache cache;
    const MultiPoly lee = lee_macwilliams(composition_distribution(c), BigInt(c.size()), *r2,
                                          SpottyParams(3, 2), cache);
    const MultiPoly expected = MultiPoly::parse_text(
        "1 + 38 z + 1221 z^2 + 26888 z^3 + 475132 z^4 + 4946304 z^5 + 30602524 z^6 "
        "+ 117912840 z^7 + 294389014 z^8 + 487268316 z^9 + 538692126 z^10 + 398386136 z^11 "
        "+ 196381596 z^12 + 63554224 z^13 + 13077404 z^14 + 1641752 z^15 + 122705 z^16 "
        "+ 5326 z^17 + 101 z^18");
    CHECK(lee == expected);
    CHECK(lee.value_at_ones() == BigInt("2147483648"));
}

TEST_CASE("lee transform of the zero code over rk 1") {
    const auto r1 = make_ring(RingSpec::rk(1));
    const LinearCode zero = span(r1, 1, 1, {});
    KernelCache cache;
    CHECK(lee_macwilliams(composition_distribution(zero), BigInt(1), *r1, SpottyParams(1, 1),
                          cache) == zpoly({{1, 0}, {2, 1}, {1, 2}}));
}

TEST_CASE("lee identity matches brute force on a small code") {
    const auto r1 = make_ring(RingSpec::rk(1));
    const LinearCode c = span(r1, 2, 2, {word(*r1, "1 u 0 1"), word(*r1, "0 0 u u")});
    KernelCache cache;
    for (uint32_t t = 1; t <= 2; ++t) {
        const SpottyParams params(2, t);
        CHECK(lee_macwilliams(composition_distribution(c), BigInt(c.size()), *r1, params,
                              cache) == lee_enumerator(dual_brute(c), params));
    }
}

TEST_CASE("kernel vanishing spot checks") {
    KernelCache cache;
    for (uint32_t b = 1; b <= 3; ++b) {
        for (uint32_t t = 1; t <= b; ++t) {
            for (uint32_t j = 0; j <= b; ++j) {
                CHECK(cache.theta(j, b, 4, t).value_at_ones() ==
                      (j == 0 ? ipow(BigInt(4), b) : BigInt(0)));
                CHECK(cache.split_kernel(j, b, 4, t).value_at_ones() ==
                      (j == 0 ? ipow(BigInt(4), b) : BigInt(0)));
            }
        }
    }
}

TEST_CASE("poisoned kernels break the transform") {
    const auto z4 = make_ring(RingSpec::integers_mod(4));
    const LinearCode c = span(z4, 1, 2, {{1, 1}});
    const SpottyParams params(1, 1);
    KernelCache cache;
    cache.inject_theta(1, 1, 4, 1, zpoly({{1, 0}, {3, 1}}));  // theta_1 := theta_0
    const MultiPoly lhs = macwilliams_hamming(alpha_distribution(c), BigInt(c.size()), 4, params,
                                              cache);
    CHECK(lhs != hamming_enumerator(dual_brute(c), params));
}
