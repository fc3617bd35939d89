#include <doctest.h>

#include <random>

#include "mspotty/errors.hpp"
#include "mspotty/poly.hpp"

using namespace mspotty;

namespace {

MultiPoly z_plus(int64_t c) {
    MultiPoly p = MultiPoly::constant(c);
    p.add_term({{Var::z(), 1}}, 1);
    return p;
}

MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 8), expd(0, 4), vard(0, 6);
    std::uniform_int_distribution<int64_t> coeff(-1000, 1000);
    MultiPoly p;
    const int terms = nterms(rng);
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (uint32_t code = 0; code < 7; ++code) {
            if (vard(rng) < 2) {
                const int e = expd(rng);
                if (e > 0) m.emplace_back(Var{code}, static_cast<uint32_t>(e));
            }
        }
        BigInt c(coeff(rng));
        c *= ipow(BigInt(10), static_cast<uint64_t>(vard(rng)) * 7);  // exercise > 64-bit
        p.add_term(std::move(m), std::move(c));
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    const MultiPoly lhs = z_plus(1) * (MultiPoly::constant(1) - MultiPoly::variable(Var::z()));
    MultiPoly expected = MultiPoly::constant(1);
    expected.add_term({{Var::z(), 2}}, -1);
    CHECK(lhs == expected);  // (1+z)(1-z) = 1 - z^2

    MultiPoly two_plus_4z = MultiPoly::constant(2);
    two_plus_4z.add_term({{Var::z(), 1}}, 4);
    CHECK(two_plus_4z.divided_exact(2) == z_plus(0).scaled(2) + MultiPoly::constant(1));
    CHECK_THROWS_AS(z_plus(1).divided_exact(2), IntegralityError);
}

TEST_CASE("canonical text") {
    MultiPoly p;
    p.add_term({}, 1);
    p.add_term({{Var::z(), 1}}, 3);
    p.add_term({{Var::z(), 2}}, 51);
    p.add_term({{Var::z(), 3}}, 137);
    p.add_term({{Var::z(), 4}}, 64);
    CHECK(p.to_text() == "1 + 3 z + 51 z^2 + 137 z^3 + 64 z^4");

    MultiPoly q;
    q.add_term({}, 1);
    q.add_term({{Var::z(), 2}}, -1);
    CHECK(q.to_text() == "1 - z^2");

    MultiPoly r;
    r.add_term({{Var::x(), 1}}, 1);
    r.add_term({{Var::x(), 1}, {Var::y(), 1}}, 239);
    r.add_term({{Var::y(), 1}, {Var::z(), 1}}, -225);
    r.add_term({{Var::z(), 1}}, -15);
    CHECK(r.to_text() == "-15 z + x - 225 z y + 239 x y");

    MultiPoly s;
    s.add_term({{Var::xi(1), 2}, {Var::yi(1), 1}}, 1);
    CHECK(s.to_text() == "x1^2 y1");

    CHECK(MultiPoly().to_text() == "0");
    CHECK(MultiPoly::constant(-7).to_text() == "-7");
}

TEST_CASE("canonical ordering is ascending degree with sequence-major ties") {
    MultiPoly p;
    p.add_term({{Var::y(), 3}}, 1);
    p.add_term({{Var::x(), 3}}, 1);
    p.add_term({{Var::z(), 1}, {Var::x(), 1}, {Var::y(), 1}}, 1);
    p.add_term({}, 5);
    CHECK(p.to_text() == "5 + z x y + x^3 + y^3");
}

TEST_CASE("evaluation") {
    // x + 239xy - 225yz - 15z at all ones
    MultiPoly p;
    p.add_term({{Var::x(), 1}}, 1);
    p.add_term({{Var::x(), 1}, {Var::y(), 1}}, 239);
    p.add_term({{Var::y(), 1}, {Var::z(), 1}}, -225);
    p.add_term({{Var::z(), 1}}, -15);
    CHECK(p.value_at_ones() == 0);
    CHECK(p.evaluate({{Var::x(), BigInt(1)}, {Var::y(), BigInt(1)}, {Var::z(), BigInt(1)}}) ==
          MultiPoly());

    // renaming merges variables: x -> y turns xy into y^2
    MultiPoly q;
    q.add_term({{Var::x(), 1}, {Var::y(), 1}}, 3);
    MultiPoly expected;
    expected.add_term({{Var::y(), 2}}, 3);
    CHECK(q.evaluate({{Var::x(), Var::y()}}) == expected);

    // identity assignment
    CHECK(q.evaluate({}) == q);

    // swap is simultaneous
    MultiPoly r;
    r.add_term({{Var::x(), 2}, {Var::y(), 1}}, 1);
    MultiPoly swapped;
    swapped.add_term({{Var::x(), 1}, {Var::y(), 2}}, 1);
    CHECK(r.evaluate({{Var::x(), Var::y()}, {Var::y(), Var::x()}}) == swapped);
}

TEST_CASE("text and json round trips") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 200; ++rep) {
        const MultiPoly p = random_poly(rng);
        CHECK(MultiPoly::parse_text(p.to_text()) == p);
        CHECK(MultiPoly::from_json_string(p.to_json_string()) == p);
    }
    CHECK(MultiPoly::parse_text("0") == MultiPoly());
    CHECK(MultiPoly::parse_text("-z + 1").to_text() == "1 - z");
    CHECK_THROWS_AS(MultiPoly::parse_text(""), ParseError);
    CHECK_THROWS_AS(MultiPoly::parse_text("1 + + z"), ParseError);
    CHECK_THROWS_AS(MultiPoly::parse_text("w^2"), ParseError);
    CHECK_THROWS_AS(MultiPoly::from_json_string("{"), ParseError);
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
    MultiPoly p = MultiPoly::constant(BigInt("538692126"));
    const MultiPoly q = p * p * p;  // ~2^87
    CHECK(q.coeff({}) == BigInt("156322640653364331416576376"));
    CHECK(q.divided_exact(BigInt("538692126")).coeff({}) ==
          BigInt("538692126") * BigInt("538692126"));

    // merging terms whose coefficients exceed the small-value buffer
    const BigInt big = ipow(BigInt(7), 100);
    MultiPoly r;
    r.add_term({{Var::z(), 1}}, big);
    r.add_term({{Var::z(), 1}}, big * 2);
    CHECK(r.coeff({{Var::z(), 1}}) == big * 3);
    r.add_term({{Var::z(), 1}}, -big * 3);
    CHECK(r.is_zero());
}
