#include <doctest.h>

#include <cmath>

#include "stc/commutant.hpp"
#include "stc/fixtures.hpp"
#include "stc/mccoy.hpp"
#include "stc/spectral.hpp"
#include "test_helpers.hpp"

using namespace stc;
using namespace stc::testing;
namespace fx = stc::fixtures;

TEST_CASE("pencil characteristic polynomial of the counterexample pair is t^3 - x*y^2") {
    PencilPoly p = pencil_charpoly(fx::a0(), fx::b0());
    REQUIRE(p.n == 3);
    REQUIRE(p.t_coeffs.size() == 4);

    MPoly x = MPoly::variable(2, 0);
    MPoly y = MPoly::variable(2, 1);
    CHECK(p.t_coeffs[3] == MPoly::constant(2, GaussianRational(1)));
    CHECK(p.t_coeffs[2].is_zero());
    CHECK(p.t_coeffs[1].is_zero());
    CHECK(p.t_coeffs[0] == -(x * y * y));

    // specializing y = 1 leaves t^3 - x, the published closed form
    MPoly c0_at_y1 = p.t_coeffs[0].specialize(1, GaussianRational(1));
    CHECK(c0_at_y1 == -x);
    CHECK(p.str() == "t^3 - x*y^2");
}

TEST_CASE("pencil specialization agrees with a directly computed charpoly") {
    Rng rng(61);
    for (int trial = 0; trial < 4; ++trial) {
        int n = 2 + static_cast<int>(rng.range(0, 1));
        QMatrix a = random_matrix(rng, n, n, 3, 2);
        QMatrix b = random_matrix(rng, n, n, 3, 2);
        PencilPoly p = pencil_charpoly(a, b);
        for (int s = 0; s < 10; ++s) {
            GaussianRational x(rng.rational(6, 3));
            GaussianRational y(rng.rational(6, 3));
            QMatrix m = a.scaled(x) + b.scaled(y);
            CHECK(p.specialize(x, y) == charpoly(m));
        }
        // coefficient of t^(n-j) has total degree <= j in (x, y)
        for (int k = 0; k <= n; ++k)
            CHECK(p.t_coeffs[static_cast<size_t>(k)].total_degree() <= n - k);
    }
}

TEST_CASE("pencil endpoint specializations") {
    Rng rng(62);
    QMatrix a = random_matrix(rng, 3, 3, 3, 2);
    QMatrix b = random_matrix(rng, 3, 3, 3, 2);
    PencilPoly p = pencil_charpoly(a, b);
    CHECK(p.specialize(GaussianRational(1), GaussianRational(0)) == charpoly(a));
    CHECK(p.specialize(GaussianRational(0), GaussianRational(1)) == charpoly(b));

    // zero pencil: t^n
    QMatrix z(2, 2, GaussianRational(0));
    PencilPoly pz = pencil_charpoly(z, z);
    CHECK(pz.str() == "t^2");

    // diag(1,2) against 0: (t - x)(t - 2x)
    QMatrix d = qmat({{1, 0}, {0, 2}});
    PencilPoly pd = pencil_charpoly(d, z);
    MPoly x = MPoly::variable(2, 0);
    MPoly expect_c0 = (x * x).scaled(GaussianRational(2));
    CHECK(pd.t_coeffs[0] == expect_c0);
    CHECK(pd.t_coeffs[1] == x.scaled(GaussianRational(-3)));
}

TEST_CASE("roots of fixed polynomials") {
    // t^3 - 1: cube roots of unity
    std::vector<GaussianRational> cube = {GaussianRational(-1), GaussianRational(0),
                                          GaussianRational(0), GaussianRational(1)};
    auto rs = roots(cube);
    REQUIRE(rs.size() == 3);
    double s32 = std::sqrt(3.0) / 2.0;
    std::vector<std::complex<double>> expected = {
        {1.0, 0.0}, {-0.5, s32}, {-0.5, -s32}};
    for (const auto& e : expected) {
        double best = 1e9;
        for (const auto& r : rs) best = std::min(best, std::abs(r - e));
        CHECK(best < 1e-10);
    }

    // t^2: exact double zero via deflation
    std::vector<GaussianRational> t2 = {GaussianRational(0), GaussianRational(0),
                                        GaussianRational(1)};
    auto zs = roots(t2);
    REQUIRE(zs.size() == 2);
    CHECK(zs[0] == std::complex<double>(0.0, 0.0));
    CHECK(zs[1] == std::complex<double>(0.0, 0.0));

    // t^3 - t = t(t-1)(t+1)
    std::vector<GaussianRational> t3t = {GaussianRational(0), GaussianRational(-1),
                                         GaussianRational(0), GaussianRational(1)};
    auto ts = roots(t3t);
    REQUIRE(ts.size() == 3);
    for (double want : {0.0, 1.0, -1.0}) {
        double best = 1e9;
        for (const auto& r : ts) best = std::min(best, std::abs(r - std::complex<double>(want, 0)));
        CHECK(best < 1e-10);
    }
}

TEST_CASE("root residuals and Vieta sums on random cubics and quartics") {
    Rng rng(63);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 3 + static_cast<int>(rng.range(0, 1));
        std::vector<GaussianRational> c;
        for (int k = 0; k < d; ++k) c.emplace_back(rng.rational(8, 3));
        c.emplace_back(1);
        auto rs = roots(c);
        REQUIRE(rs.size() == static_cast<size_t>(d));

        std::complex<double> sum = 0.0, prod = 1.0;
        for (const auto& r : rs) {
            sum += r;
            prod *= r;
        }
        double scale = 1.0 + std::abs(c[static_cast<size_t>(d) - 1].to_complex());
        CHECK(std::abs(sum + c[static_cast<size_t>(d) - 1].to_complex()) < 1e-9 * scale);
        double sign = d % 2 == 0 ? 1.0 : -1.0;
        double pscale = 1.0 + std::abs(c[0].to_complex());
        CHECK(std::abs(prod - sign * c[0].to_complex()) < 1e-9 * pscale);
    }
}

TEST_CASE("property L fails on the counterexample pair") {
    PropertyLReport rep = property_l(fx::a0(), fx::b0());
    CHECK(rep.verdict == PLVerdict::FAILS);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->max_residual > rep.tol);

    // padded couples inherit the failure
    for (int pad = 1; pad <= 2; ++pad) {
        QMatrix z(pad, pad, GaussianRational(0));
        QMatrix a = direct_sum(fx::a0(), z);
        QMatrix b = direct_sum(fx::b0(), z);
        CHECK(property_l(a, b).verdict == PLVerdict::FAILS);
    }
}

TEST_CASE("property L holds in the trivial and nilpotent-commutator cases") {
    QMatrix x = qmat({{1, 2}, {0, 3}});
    PropertyLReport same = property_l(x, x);
    CHECK(same.verdict == PLVerdict::HOLDS_NUMERICALLY);
    REQUIRE(same.pairing.has_value());

    // (B, C) of the counterexample pair: both nilpotent, all spectra zero
    PropertyLReport bc = property_l(fx::b0(), fx::c0());
    CHECK(bc.verdict == PLVerdict::HOLDS_NUMERICALLY);

    // random valid pairs: (B, C) has property L with the all-zero ordering
    Rng rng(64);
    for (uint64_t seed = 0; seed < 25; ++seed) {
        QMatrix a = random_matrix(rng, 3, 3, 2, 1);
        QMatrix b = sample_B(analyze(a), 500 + seed, 6);
        QMatrix c = commutator(a, b);
        PropertyLReport r = property_l(b, c);
        CHECK(r.verdict == PLVerdict::HOLDS_NUMERICALLY);
        REQUIRE(r.pairing.has_value());
    }
}

TEST_CASE("an ST verdict never coexists with a property L failure") {
    Rng rng(67);
    int checked = 0;
    for (uint64_t seed = 900; checked < 12; ++seed) {
        int n = 2 + static_cast<int>(rng.range(0, 1));
        QMatrix a = random_matrix(rng, n, n, 2, 1);
        QMatrix b = sample_B(analyze(a), seed, 5);
        if (!st_test(a, b).is_st()) continue;
        CHECK(property_l(a, b).verdict == PLVerdict::HOLDS_NUMERICALLY);
        ++checked;
    }
}

TEST_CASE("simultaneously triangularizable pairs have property L") {
    Rng rng(65);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng.range(0, 1));
        QMatrix a(n, n, GaussianRational(0));
        QMatrix b(n, n, GaussianRational(0));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                a.at(i, j) = GaussianRational(rng.rational(4, 2));
                b.at(i, j) = GaussianRational(rng.rational(4, 2));
            }
        QMatrix p = random_invertible(rng, n);
        QMatrix pa = inverse(p) * a * p;
        QMatrix pb = inverse(p) * b * p;
        CHECK(property_l(pa, pb).verdict == PLVerdict::HOLDS_NUMERICALLY);
    }
}

TEST_CASE("scale covariance of the property L verdict") {
    Rng rng(66);
    for (int trial = 0; trial < 6; ++trial) {
        QMatrix a = trial % 2 == 0 ? fx::a0() : random_matrix(rng, 3, 3, 2, 1);
        QMatrix b = trial % 2 == 0 ? fx::b0() : sample_B(analyze(a), 70 + static_cast<uint64_t>(trial), 5);
        auto v1 = property_l(a, b).verdict;
        auto v2 = property_l(a + a, b).verdict;
        CHECK(v1 == v2);
    }
}

TEST_CASE("exact spectrum extraction") {
    auto s = exact_spectrum(charpoly(fx::b0()));
    REQUIRE(s.has_value());
    for (const auto& r : *s) CHECK(r.is_zero());

    auto d = exact_spectrum(charpoly(qmat({{1, 0}, {0, 2}})));
    REQUIRE(d.has_value());
    CHECK(((*d)[0] == GaussianRational(1) || (*d)[0] == GaussianRational(2)));

    // t^2 + 1 splits over Q(i) with roots +-i
    std::vector<GaussianRational> c = {GaussianRational(1), GaussianRational(0),
                                       GaussianRational(1)};
    auto gi = exact_spectrum(c);
    REQUIRE(gi.has_value());
    CHECK(((*gi)[0] == GaussianRational::i() || (*gi)[0] == -GaussianRational::i()));

    // t^2 - 2 does not split over Q(i)
    std::vector<GaussianRational> r2 = {GaussianRational(-2), GaussianRational(0),
                                        GaussianRational(1)};
    CHECK_FALSE(exact_spectrum(r2).has_value());

    // rational non-integer roots: (t - 1/2)(t + 3) = t^2 + 5/2 t - 3/2
    std::vector<GaussianRational> q = {GaussianRational(Rational(-3, 2)),
                                       GaussianRational(Rational(5, 2)), GaussianRational(1)};
    auto qs = exact_spectrum(q);
    REQUIRE(qs.has_value());
    bool found_half = false;
    for (const auto& r : *qs) found_half = found_half || r == GaussianRational(Rational(1, 2));
    CHECK(found_half);
}

TEST_CASE("exact pencil refutation of the counterexample pair") {
    auto cert = property_l_exact_refutation(fx::a0(), fx::b0());
    REQUIRE(cert.has_value());
    CHECK_FALSE(cert->equal);
    CHECK(cert->pencil == "t^3 - x*y^2");
    CHECK(cert->mismatch_monomial == "x*y^2");
    CHECK(cert->mismatch_have == "-1");
    CHECK(cert->mismatch_want == "0");
}

TEST_CASE("exact pencil equality for commuting diagonal matrices") {
    auto cert = property_l_exact_refutation(qmat({{1, 0}, {0, 2}}), qmat({{3, 0}, {0, 4}}));
    REQUIRE(cert.has_value());
    CHECK(cert->equal);
    REQUIRE(cert->pairing.size() == 2);
    // the diagonal order is the matching order
    CHECK(cert->pairing == std::vector<int>({0, 1}));

    // zero variant pairs with the derogatory matrix exactly
    QMatrix z3(3, 3, GaussianRational(0));
    auto zc = property_l_exact_refutation(fx::a0(), z3);
    REQUIRE(zc.has_value());
    CHECK(zc->equal);

    // irrational spectrum: absent, caller falls back to the numeric test
    QMatrix r2 = qmat({{0, 2}, {1, 0}});
    CHECK_FALSE(property_l_exact_refutation(r2, z3 = QMatrix(2, 2, GaussianRational(0))).has_value());
}
