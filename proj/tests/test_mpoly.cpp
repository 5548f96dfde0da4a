#include <doctest.h>

#include "stc/mpoly.hpp"
#include "stc/random.hpp"

using namespace stc;

namespace {

MPoly random_poly(Rng& rng, int nv, int max_terms) {
    MPoly acc(nv);
    int terms = 1 + static_cast<int>(rng.range(0, max_terms - 1));
    for (int t = 0; t < terms; ++t) {
        MPoly mono = MPoly::constant(nv, GaussianRational(rng.rational(6, 3)));
        for (int v = 0; v < nv; ++v) {
            long e = rng.range(0, 3);
            for (long k = 0; k < e; ++k) mono *= MPoly::variable(nv, v);
        }
        acc += mono;
    }
    return acc;
}

std::vector<GaussianRational> random_point(Rng& rng, int nv) {
    std::vector<GaussianRational> pt;
    for (int v = 0; v < nv; ++v) pt.emplace_back(rng.rational(5, 3));
    return pt;
}

}  // namespace

TEST_CASE("construction and canonical form") {
    MPoly x1 = MPoly::variable(2, 0);
    MPoly x2 = MPoly::variable(2, 1);

    MPoly p = (x1 + x2) * (x1 - x2);
    MPoly expected = x1 * x1 - x2 * x2;
    CHECK(p == expected);
    CHECK(p.num_terms() == 2);

    CHECK((p * MPoly(2)).is_zero());
    CHECK((p - p).is_zero());
    CHECK_FALSE((x1 - x2).is_zero());

    MPoly one = MPoly::constant(1, GaussianRational(1));
    MPoly x = MPoly::variable(1, 0);
    MPoly cube = (x + one) * (x + one) * (x + one);
    // binomial expansion x^3 + 3x^2 + 3x + 1
    MPoly expect = x * x * x + (x * x).scaled(GaussianRational(3)) +
                   x.scaled(GaussianRational(3)) + one;
    CHECK(cube == expect);
    CHECK(cube.str() == "x1^3 + 3*x1^2 + 3*x1 + 1");

    CHECK_THROWS_AS(x1 + x, VariableCountMismatch);
    CHECK_THROWS_AS(x1 * MPoly::variable(3, 0), VariableCountMismatch);
}

TEST_CASE("evaluation") {
    MPoly x1 = MPoly::variable(2, 0);
    MPoly x2 = MPoly::variable(2, 1);
    MPoly p = x1 * x1 - x2 * x2;
    CHECK(p.eval({GaussianRational(3), GaussianRational(2)}) == GaussianRational(5));

    MPoly seven = MPoly::constant(0, GaussianRational(7));
    CHECK(seven.eval({}) == GaussianRational(7));

    MPoly prod = MPoly::variable(3, 0) * MPoly::variable(3, 1) * MPoly::variable(3, 2);
    CHECK(prod.eval({GaussianRational(Rational(1, 2)), GaussianRational(Rational(1, 3)),
                     GaussianRational(Rational(1, 5))}) == GaussianRational(Rational(1, 30)));

    CHECK_THROWS_AS(p.eval({GaussianRational(1)}), VariableCountMismatch);
}

TEST_CASE("ring homomorphism under evaluation") {
    Rng rng(31);
    for (int k = 0; k < 40; ++k) {
        int nv = 1 + static_cast<int>(rng.range(0, 2));
        MPoly p = random_poly(rng, nv, 5);
        MPoly q = random_poly(rng, nv, 5);
        auto pt = random_point(rng, nv);
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    }
}

TEST_CASE("canonicality: addition commutes bit-for-bit") {
    Rng rng(32);
    for (int k = 0; k < 40; ++k) {
        int nv = 1 + static_cast<int>(rng.range(0, 2));
        MPoly p = random_poly(rng, nv, 6);
        MPoly q = random_poly(rng, nv, 6);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("degree is additive over products") {
    Rng rng(33);
    int checked = 0;
    while (checked < 40) {
        int nv = 1 + static_cast<int>(rng.range(0, 2));
        MPoly p = random_poly(rng, nv, 4);
        MPoly q = random_poly(rng, nv, 4);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
        ++checked;
    }
}

TEST_CASE("specialization") {
    MPoly x = MPoly::variable(2, 0);
    MPoly y = MPoly::variable(2, 1);
    MPoly p = x * x * y + y.scaled(GaussianRational(2)) + MPoly::constant(2, GaussianRational(5));
    MPoly at_y1 = p.specialize(1, GaussianRational(1));
    CHECK(at_y1 == x * x + MPoly::constant(2, GaussianRational(7)));
    CHECK(p.specialize(0, GaussianRational(0)) ==
          y.scaled(GaussianRational(2)) + MPoly::constant(2, GaussianRational(5)));
}

TEST_CASE("term ceiling raises SymbolicBlowup") {
    size_t saved = MPoly::term_limit();
    MPoly::set_term_limit(8);
    Rng rng(34);
    MPoly p = random_poly(rng, 2, 3);
    bool blew_up = false;
    try {
        MPoly acc = MPoly::constant(2, GaussianRational(1));
        MPoly big = MPoly::variable(2, 0) + MPoly::variable(2, 1) +
                    MPoly::constant(2, GaussianRational(1));
        for (int k = 0; k < 10; ++k) acc *= big;
    } catch (const SymbolicBlowup&) {
        blew_up = true;
    }
    MPoly::set_term_limit(saved);
    CHECK(blew_up);
}

TEST_CASE("printing") {
    MPoly x = MPoly::variable(2, 0);
    MPoly y = MPoly::variable(2, 1);
    MPoly p = x * y.scaled(GaussianRational(Rational(-1, 2))) + MPoly::constant(2, GaussianRational(1));
    CHECK(p.str() == "-1/2*x1*x2 + 1");
    CHECK(p.str({"u", "v"}) == "-1/2*u*v + 1");
    CHECK(MPoly(3).str() == "0");

    MPoly gi = x.scaled(GaussianRational(Rational(0), Rational(1)));
    CHECK(gi.str() == "(0+1*i)*x1");
}
