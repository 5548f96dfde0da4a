#include <doctest.h>

#include <complex>

#include "stc/random.hpp"
#include "stc/rational.hpp"

using namespace stc;

TEST_CASE("rational arithmetic and canonical form") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK((Rational(0) - Rational(0)).str() == "0");
    CHECK(Rational(7, -2).str() == "-7/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("gaussian rational field operations") {
    GaussianRational half(Rational(1, 2));
    GaussianRational third(Rational(1, 3));
    CHECK((half + third) == GaussianRational(Rational(5, 6)));

    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));

    // (1+1i)/(1-1i) = i; oracle: back-multiplication
    GaussianRational a(Rational(1), Rational(1));
    GaussianRational b(Rational(1), Rational(-1));
    GaussianRational q = a / b;
    CHECK(q == i);
    CHECK(q * b == a);

    CHECK_THROWS_AS(a / GaussianRational(0), DivisionByZero);
    CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZero);
}

TEST_CASE("field inverse property on random values") {
    Rng rng(101);
    int checked = 0;
    while (checked < 200) {
        GaussianRational x(rng.rational(20, 9), rng.rational(20, 9));
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == GaussianRational(1));
        CHECK((x * x.inverse()) * x == x);
        ++checked;
    }
}

TEST_CASE("reduction invariant for random quadruples") {
    Rng rng(7);
    for (int k = 0; k < 300; ++k) {
        long p = rng.range(-1000, 1000);
        long q = rng.range(1, 1000) * (rng.range(0, 1) ? 1 : -1);
        long r = rng.range(-1000, 1000);
        long s = rng.range(1, 1000) * (rng.range(0, 1) ? 1 : -1);
        GaussianRational z(Rational(p, q), Rational(r, s));
        // stored reduced: gcd(|num|, den) = 1, den > 0
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), z.re().raw().get_num().get_mpz_t(), z.re().raw().get_den().get_mpz_t());
        CHECK(g == 1);
        mpz_gcd(g.get_mpz_t(), z.im().raw().get_num().get_mpz_t(), z.im().raw().get_den().get_mpz_t());
        CHECK(g == 1);
        CHECK(z.re().raw().get_den() > 0);
        CHECK(z.im().raw().get_den() > 0);
    }
}

TEST_CASE("canonical string round-trip") {
    CHECK(GaussianRational(Rational(1, 2)).str() == "1/2");
    CHECK(GaussianRational(Rational(1, 2), Rational(-1, 3)).str() == "1/2-1/3*i");
    CHECK(GaussianRational(Rational(0), Rational(1)).str() == "0+1*i");
    CHECK(GaussianRational(Rational(-2), Rational(3, 4)).str() == "-2+3/4*i");

    CHECK(GaussianRational::parse("1/2-1/3*i") == GaussianRational(Rational(1, 2), Rational(-1, 3)));
    CHECK(GaussianRational::parse("-5") == GaussianRational(-5));
    CHECK(GaussianRational::parse("3*i") == GaussianRational(Rational(0), Rational(3)));
    CHECK(GaussianRational::parse("-1/7*i") == GaussianRational(Rational(0), Rational(-1, 7)));

    Rng rng(55);
    for (int k = 0; k < 300; ++k) {
        GaussianRational z(rng.rational(10000, 999), rng.rational(10000, 999));
        CHECK(GaussianRational::parse(z.str()) == z);
    }

    CHECK_THROWS_AS(GaussianRational::parse("1+"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("i"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(GaussianRational::parse("2 3"), ParseError);
}

TEST_CASE("conversion to complex double") {
    CHECK(GaussianRational(Rational(1, 2)).to_complex() == std::complex<double>(0.5, 0.0));
    CHECK(GaussianRational(0).to_complex() == std::complex<double>(0.0, 0.0));
    // IEEE-754 nearest for 1/3
    std::complex<double> c = GaussianRational(Rational(1, 3), Rational(1, 3)).to_complex();
    CHECK(c.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(c.imag() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));

    // overflow: 10^400 is far beyond double range
    Rational huge(mpq_class(mpz_class("1" + std::string(400, '0'))));
    CHECK_THROWS_AS(huge.to_double(), OverflowToFloat);
}
