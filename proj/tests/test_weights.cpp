#include <doctest.h>

#include <random>

#include "mspotty/weights.hpp"

using namespace mspotty;

TEST_CASE("m-spotty hamming weight") {
    // byte weights (1,3,1) with t=2 give ceilings 1+2+1
    const std::vector<Elem> w{1, 0, 0, 2, 4, 1, 0, 0, 2};
    CHECK(m_spotty_hamming_weight(w, SpottyParams(3, 2)) == 4);
    CHECK(m_spotty_hamming_weight(w, SpottyParams(3, 1)) == 5);  // t=1 is plain weight
    const std::vector<Elem> zero(9, 0);
    CHECK(m_spotty_hamming_weight(zero, SpottyParams(3, 2)) == 0);
    CHECK_THROWS_AS(SpottyParams(3, 4), DomainError);
    CHECK_THROWS_AS(SpottyParams(3, 0), DomainError);
}

TEST_CASE("m-spotty distance") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const std::vector<Elem> u{1, 0}, v{0, 1};
    CHECK(m_spotty_distance(u, v, SpottyParams(2, 2)) == 1);
    CHECK(m_spotty_distance(u, u, SpottyParams(2, 2)) == 0);
    CHECK(m_spotty_distance(u, std::vector<Elem>{0, 0}, SpottyParams(2, 2)) ==
          m_spotty_hamming_weight(u, SpottyParams(2, 2)));
}

TEST_CASE("pair counts") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const Elem u = r2->parse_element("u"), v = r2->parse_element("v"),
               uv = r2->parse_element("uv");
    const std::vector<Elem> a{1, 0, u}, b{0, v, uv};
    const PairCounts c = pair_counts(a, b);
    CHECK(c.f01 == 1);
    CHECK(c.f10 == 1);
    CHECK(c.f11 == 1);

    const std::vector<Elem> zero{0, 0, 0};
    const PairCounts d = pair_counts(a, zero);
    CHECK(d.f01 == 0);
    CHECK(d.f10 == hamming_weight(a));
    CHECK(d.f11 == 0);

    const PairCounts e = pair_counts(a, a);
    CHECK(e.f01 == 0);
    CHECK(e.f10 == 0);
    CHECK(e.f11 == hamming_weight(a));
}

TEST_CASE("jkl middle case") {
    // single byte, t=2, f01=1, f11=1: J = floor(1/2) + 1
    const std::vector<Elem> u{0, 1, 0}, v{1, 1, 0};
    const JklValues s = jkl(u, v, SpottyParams(3, 2));
    CHECK(s.j == 1);
    CHECK(s.l == 0);
    const JklValues z = jkl(std::vector<Elem>{0, 0, 0}, std::vector<Elem>{0, 0, 0},
                            SpottyParams(3, 2));
    CHECK(z.j == 0);
    CHECK(z.k == 0);
    CHECK(z.l == 0);
}

TEST_CASE("jkl identities hold on random pairs") {
    std::mt19937_64 rng(5);
    for (const RingSpec& spec :
         {RingSpec::integers_mod(6), RingSpec::rk(2), RingSpec::chain_ring(2, 3)}) {
        const auto ring = make_ring(spec);
        std::uniform_int_distribution<uint64_t> dist(0, ring->size() - 1);
        for (uint32_t b = 1; b <= 4; ++b) {
            for (uint32_t t = 1; t <= b; ++t) {
                const SpottyParams params(b, t);
                for (int rep = 0; rep < 60; ++rep) {
                    std::vector<Elem> u(3 * b), v(3 * b);
                    for (auto& x : u) x = static_cast<Elem>(dist(rng));
                    for (auto& x : v) x = static_cast<Elem>(dist(rng));
                    const JklValues s = jkl(u, v, params);
                    CHECK(s.j + s.l == m_spotty_hamming_weight(v, params));
                    CHECK(s.k + s.l == m_spotty_hamming_weight(u, params));
                }
            }
        }
    }
}

TEST_CASE("m-spotty lee weight") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const Elem uv = r2->parse_element("uv");
    const std::vector<Elem> byte{0, 0, uv};
    CHECK(m_spotty_lee_weight(*r2, byte, SpottyParams(3, 2)) == 2);  // ceil(4/2)
    CHECK(m_spotty_lee_weight(*r2, byte, SpottyParams(3, 1)) == 4);
    CHECK(m_spotty_lee_weight(*r2, std::vector<Elem>(3, 0), SpottyParams(3, 2)) == 0);

    const auto z4 = make_ring(RingSpec::integers_mod(4));
    CHECK_THROWS_AS(m_spotty_lee_weight(*z4, byte, SpottyParams(3, 2)), UnsupportedError);
}

TEST_CASE("m-spotty lee distance") {
    const auto r2 = make_ring(RingSpec::rk(2));
    const std::vector<Elem> one{1}, one_uv{r2->parse_element("1+uv")};
    CHECK(m_spotty_lee_distance(*r2, one, one_uv, SpottyParams(1, 1)) == 4);  // w_L(uv)
    CHECK(m_spotty_lee_distance(*r2, one, one, SpottyParams(1, 1)) == 0);
    CHECK(m_spotty_lee_distance(*r2, one, std::vector<Elem>{0}, SpottyParams(1, 1)) ==
          m_spotty_lee_weight(*r2, one, SpottyParams(1, 1)));
}

TEST_CASE("metric axioms on random triples") {
    std::mt19937_64 rng(17);
    const auto r2 = make_ring(RingSpec::rk(2));
    std::uniform_int_distribution<uint64_t> dist(0, 15);
    const SpottyParams params(3, 2);
    for (int rep = 0; rep < 300; ++rep) {
        std::vector<Elem> u(6), v(6), w(6);
        for (auto& x : u) x = static_cast<Elem>(dist(rng));
        for (auto& x : v) x = static_cast<Elem>(dist(rng));
        for (auto& x : w) x = static_cast<Elem>(dist(rng));
        CHECK(m_spotty_distance(u, v, params) == m_spotty_distance(v, u, params));
        CHECK((m_spotty_distance(u, v, params) == 0) == (u == v));
        CHECK(m_spotty_distance(u, v, params) <=
              m_spotty_distance(u, w, params) + m_spotty_distance(w, v, params));
        CHECK(m_spotty_lee_distance(*r2, u, v, params) ==
              m_spotty_lee_distance(*r2, v, u, params));
        CHECK((m_spotty_lee_distance(*r2, u, v, params) == 0) == (u == v));
        CHECK(m_spotty_lee_distance(*r2, u, v, params) <=
              m_spotty_lee_distance(*r2, u, w, params) +
                  m_spotty_lee_distance(*r2, w, v, params));
    }
}
