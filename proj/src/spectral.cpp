#include "stc/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "stc/random.hpp"

namespace stc {

std::vector<GaussianRational> PencilPoly::specialize(const GaussianRational& x,
                                                     const GaussianRational& y) const {
    std::vector<GaussianRational> out;
    out.reserve(t_coeffs.size());
    for (const MPoly& c : t_coeffs) out.push_back(c.eval({x, y}));
    return out;
}

MPoly PencilPoly::to_trivariate() const {
    // variable order (t, x, y) so that the canonical form leads with powers of t
    MPoly acc(3);
    MPoly t = MPoly::variable(3, 0);
    MPoly tpow = MPoly::constant(3, GaussianRational(1));
    for (size_t k = 0; k < t_coeffs.size(); ++k) {
        if (k > 0) tpow *= t;
        // re-embed the bivariate coefficient into three variables
        for (const MPoly::Term& term : t_coeffs[k].terms()) {
            MPoly mono = MPoly::constant(3, term.coeff);
            for (int v = 0; v < 2; ++v)
                for (int e = 0; e < term.exps[static_cast<size_t>(v)]; ++e)
                    mono *= MPoly::variable(3, v + 1);
            acc += mono * tpow;
        }
    }
    return acc;
}

std::string PencilPoly::str() const { return to_trivariate().str({"t", "x", "y"}); }

PencilPoly pencil_charpoly(const QMatrix& a, const QMatrix& b) {
    a.require_square("pencil_charpoly");
    a.require_same_shape(b, "pencil_charpoly");
    PolyMatrix xa = lift_matrix(a, 2);
    PolyMatrix yb = lift_matrix(b, 2);
    MPoly x = MPoly::variable(2, 0);
    MPoly y = MPoly::variable(2, 1);
    PolyMatrix pencil(a.rows(), a.cols(), MPoly(2));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            pencil.at(i, j) = xa.at(i, j) * x + yb.at(i, j) * y;
    PencilPoly out;
    out.n = a.rows();
    out.t_coeffs = charpoly(pencil);
    return out;
}

namespace {

using cxd = std::complex<double>;

double poly_abs_bound(const std::vector<cxd>& c) {
    double m = 0.0;
    for (size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k]));
    return m;
}

cxd horner(const std::vector<cxd>& c, cxd z) {
    cxd acc = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
}

cxd horner_derivative(const std::vector<cxd>& c, cxd z) {
    cxd acc = c.back() * static_cast<double>(c.size() - 1);
    for (size_t k = c.size() - 1; k-- > 1;) acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
}

// ---- exact univariate helpers over Q(i), coefficients low-degree first ----

using UPoly = std::vector<GaussianRational>;

UPoly poly_trim(UPoly p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    return p;
}

UPoly poly_monic(UPoly p) {
    p = poly_trim(std::move(p));
    const GaussianRational& lead = p.back();
    if (!lead.is_zero() && lead != GaussianRational(1))
        for (auto& c : p) c = c / lead;
    return p;
}

UPoly poly_derivative(const UPoly& p) {
    if (p.size() <= 1) return {GaussianRational(0)};
    UPoly d(p.size() - 1, GaussianRational(0));
    for (size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * GaussianRational(static_cast<long>(k));
    return poly_trim(std::move(d));
}

// division with remainder; both quotient and remainder exact
std::pair<UPoly, UPoly> poly_divmod(UPoly a, const UPoly& b) {
    UPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, GaussianRational(0));
    GaussianRational lead_inv = b.back().inverse();
    while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
        size_t shift = a.size() - b.size();
        GaussianRational f = a.back() * lead_inv;
        q[shift] = f;
        for (size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a = poly_trim(std::move(a));
    }
    return {poly_trim(std::move(q)), poly_trim(std::move(a))};
}

UPoly poly_gcd(UPoly a, UPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!(b.size() == 1 && b[0].is_zero())) {
        UPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

int poly_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

}  // namespace

namespace {

// Durand-Kerner core: `c` monic with a nonzero constant term, degree >= 1
std::vector<cxd> durand_kerner(const std::vector<GaussianRational>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<cxd> out;
    if (d == 0) return out;
    if (d == 1) {
        out.push_back((-c[0]).to_complex());
        return out;
    }

    std::vector<cxd> cd;
    cd.reserve(c.size());
    for (const auto& ck : c) cd.push_back(ck.to_complex());

    // scaled-circle start; the offset angle avoids symmetric stalls
    const double radius = 1.0 + poly_abs_bound(cd);
    std::vector<cxd> z(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        double angle = 2.0 * M_PI * k / d + 0.5;
        z[static_cast<size_t>(k)] = radius * cxd(std::cos(angle), std::sin(angle));
    }

    const int max_iters = 1000;
    bool converged = false;
    double max_step = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        max_step = 0.0;
        double max_mag = 0.0;
        for (int i = 0; i < d; ++i) {
            cxd denom(1.0, 0.0);
            for (int j = 0; j < d; ++j)
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (denom == cxd(0.0, 0.0)) {
                // coincident iterates: nudge and continue
                z[static_cast<size_t>(i)] += cxd(1e-8, 1e-8);
                max_step = 1.0;
                continue;
            }
            cxd step = horner(cd, z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= step;
            max_step = std::max(max_step, std::abs(step));
            max_mag = std::max(max_mag, std::abs(z[static_cast<size_t>(i)]));
        }
        if (max_step < 1e-13 * (1.0 + max_mag)) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NoConvergence("Durand-Kerner stalled, last max step " + std::to_string(max_step));

    // one Newton polish per root
    for (auto& r : z) {
        cxd dp = horner_derivative(cd, r);
        if (std::abs(dp) > 1e-12) r -= horner(cd, r) / dp;
    }
    out.insert(out.end(), z.begin(), z.end());
    return out;
}

}  // namespace

std::vector<cxd> roots(const std::vector<GaussianRational>& monic_coeffs) {
    if (monic_coeffs.size() < 2) throw Error("roots: degree must be at least 1");
    UPoly c = monic_coeffs;
    if (c.back().is_zero()) throw Error("roots: zero leading coefficient");
    c = poly_monic(std::move(c));

    std::vector<cxd> out;
    // exact deflation of zero roots: numeric iteration on t^m junk would
    // otherwise pollute nilpotent spectra
    while (c.size() > 1 && c.front().is_zero()) {
        out.emplace_back(0.0, 0.0);
        c.erase(c.begin());
    }

    // peel multiplicity layers exactly: cur/gcd(cur, cur') is square-free with
    // the distinct roots of cur, and the gcd keeps each with multiplicity - 1;
    // the iteration only ever feeds square-free parts to the solver
    UPoly cur = std::move(c);
    while (poly_degree(cur) >= 1) {
        UPoly g = poly_gcd(cur, poly_derivative(cur));
        UPoly radical = poly_degree(g) == 0 ? cur : poly_monic(poly_divmod(cur, g).first);
        auto layer = durand_kerner(radical);
        out.insert(out.end(), layer.begin(), layer.end());
        cur = std::move(g);
    }
    return out;
}

namespace {

// minimal achievable max |nu_sigma(j) - cand_j| over perfect matchings
// (bottleneck assignment; n <= 8, solved by threshold + augmenting paths)
class BottleneckMatcher {
  public:
    BottleneckMatcher(const std::vector<cxd>& nu, const std::vector<cxd>& cand) {
        n_ = static_cast<int>(nu.size());
        cost_.resize(static_cast<size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                cost_[static_cast<size_t>(i) * n_ + j] = std::abs(nu[static_cast<size_t>(i)] -
                                                                  cand[static_cast<size_t>(j)]);
    }

    double solve() const {
        std::vector<double> ts = cost_;
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        int lo = 0, hi = static_cast<int>(ts.size()) - 1;
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (feasible(ts[static_cast<size_t>(mid)])) hi = mid;
            else lo = mid + 1;
        }
        return ts[static_cast<size_t>(lo)];
    }

    bool feasible(double threshold) const {
        std::vector<int> match(static_cast<size_t>(n_), -1);
        for (int i = 0; i < n_; ++i) {
            std::vector<bool> used(static_cast<size_t>(n_), false);
            if (!augment(i, threshold, used, match)) return false;
        }
        return true;
    }

  private:
    bool augment(int i, double threshold, std::vector<bool>& used, std::vector<int>& match) const {
        for (int j = 0; j < n_; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            if (cost_[static_cast<size_t>(i) * n_ + j] > threshold) continue;
            used[static_cast<size_t>(j)] = true;
            if (match[static_cast<size_t>(j)] < 0 || augment(match[static_cast<size_t>(j)], threshold, used, match)) {
                match[static_cast<size_t>(j)] = i;
                return true;
            }
        }
        return false;
    }

    int n_;
    std::vector<double> cost_;
};

double pairing_residual(const std::vector<cxd>& nu, const std::vector<cxd>& lambda,
                        const std::vector<cxd>& mu, const std::vector<int>& pi, double x,
                        double y) {
    std::vector<cxd> cand(lambda.size());
    for (size_t j = 0; j < lambda.size(); ++j)
        cand[j] = x * lambda[j] + y * mu[static_cast<size_t>(pi[j])];
    return BottleneckMatcher(nu, cand).solve();
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

PropertyLReport property_l(const QMatrix& a, const QMatrix& b, int num_samples, double tol,
                           uint64_t seed) {
    a.require_square("property_l");
    a.require_same_shape(b, "property_l");
    const int n = a.rows();
    if (n > 8) throw UnsupportedSize("property_l pairing search handles n <= 8");
    if (num_samples < 1) throw Error("property_l needs at least one sample");

    std::vector<cxd> lambda = roots(charpoly(a));
    std::vector<cxd> mu = roots(charpoly(b));

    // sample list: one generic anchor first, then the fixed probes, then the
    // remaining random samples; (0,0) is excluded
    Rng rng(seed);
    auto random_sample = [&]() {
        for (;;) {
            Rational x = rng.rational(10, 3);
            Rational y = rng.rational(10, 3);
            if (!x.is_zero() || !y.is_zero()) return std::make_pair(x, y);
        }
    };
    std::vector<std::pair<Rational, Rational>> pts;
    pts.push_back(random_sample());
    pts.push_back({Rational(1), Rational(0)});
    pts.push_back({Rational(0), Rational(1)});
    pts.push_back({Rational(1), Rational(1)});
    pts.push_back({Rational(1), Rational(-1)});
    while (static_cast<int>(pts.size()) < std::max(num_samples, 5)) pts.push_back(random_sample());

    PropertyLReport rep;
    rep.tol = tol;

    std::vector<std::vector<int>> perms = all_permutations(n);
    std::vector<char> viable(perms.size(), 1);

    std::vector<std::vector<cxd>> pencil_roots;  // per sample, for the final report
    for (size_t s = 0; s < pts.size(); ++s) {
        const auto& [rx, ry] = pts[s];
        double x = rx.to_double(), y = ry.to_double();
        QMatrix m = a.scaled(GaussianRational(rx)) + b.scaled(GaussianRational(ry));
        std::vector<cxd> nu = roots(charpoly(m));

        bool any_left = false;
        for (size_t p = 0; p < perms.size(); ++p) {
            if (!viable[p]) continue;
            double r = pairing_residual(nu, lambda, mu, perms[p], x, y);
            if (r > tol) viable[p] = 0;
            else any_left = true;
        }
        if (!any_left) {
            // partial record, then how close ANY pairing can get at the witness
            for (size_t q = 0; q < pencil_roots.size(); ++q) {
                double rq = -1.0;
                for (const auto& perm : perms) {
                    double r = pairing_residual(pencil_roots[q], lambda, mu, perm,
                                                pts[q].first.to_double(), pts[q].second.to_double());
                    if (rq < 0 || r < rq) rq = r;
                }
                rep.samples.push_back({pts[q].first, pts[q].second, rq});
            }
            double best_any = -1.0;
            for (const auto& perm : perms) {
                double r = pairing_residual(nu, lambda, mu, perm, x, y);
                if (best_any < 0 || r < best_any) best_any = r;
            }
            rep.samples.push_back({rx, ry, best_any});
            rep.witness = rep.samples.back();
            rep.verdict = PLVerdict::FAILS;
            return rep;
        }
        pencil_roots.push_back(std::move(nu));
    }

    // lexicographically first surviving pairing; report its own residuals
    std::vector<int> chosen;
    for (size_t p = 0; p < perms.size(); ++p) {
        if (viable[p]) {
            chosen = perms[p];
            break;
        }
    }
    for (size_t s = 0; s < pts.size(); ++s) {
        double r = pairing_residual(pencil_roots[s], lambda, mu, chosen,
                                    pts[s].first.to_double(), pts[s].second.to_double());
        rep.samples.push_back({pts[s].first, pts[s].second, r});
    }
    rep.pairing = std::move(chosen);
    rep.verdict = PLVerdict::HOLDS_NUMERICALLY;
    return rep;
}

namespace {

// synthetic division of a monic polynomial by (t - r); remainder must vanish
std::vector<GaussianRational> deflate_exact(const std::vector<GaussianRational>& c,
                                            const GaussianRational& r) {
    const size_t d = c.size() - 1;
    std::vector<GaussianRational> q(d, GaussianRational(0));
    q[d - 1] = c[d];
    for (size_t k = d - 1; k >= 1; --k) q[k - 1] = c[k] + r * q[k];
    return q;  // caller guarantees p(r) = 0
}

// all Gaussian integers with norm m (a^2 + b^2 = m), up to units
void gaussian_with_norm(const mpz_class& m, std::vector<GaussianRational>& out) {
    mpz_class a = 0;
    for (; a * a * 2 <= m; ++a) {
        mpz_class b2 = m - a * a;
        mpz_class b = sqrt(b2);
        if (b * b != b2) continue;
        Rational ra{mpq_class(a)}, rb{mpq_class(b)};
        out.emplace_back(ra, rb);
        out.emplace_back(rb, ra);
    }
}

std::optional<GaussianRational> find_exact_root(const std::vector<GaussianRational>& c) {
    // candidates: g / L with g a Gaussian-integer divisor of the scaled
    // constant term, L the common denominator
    const size_t d = c.size() - 1;
    mpz_class lcm_den = 1;
    for (const auto& ck : c) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), ck.re().raw().get_den().get_mpz_t());
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), ck.im().raw().get_den().get_mpz_t());
    }
    Rational scale{mpq_class(lcm_den)};
    // q(s) = L^d p(s/L): q0 = c0 * L^d, Gaussian integer
    Rational ld(1);
    for (size_t k = 0; k < d; ++k) ld = ld * scale;
    GaussianRational q0 = c[0] * GaussianRational(ld);

    mpz_class na = q0.re().raw().get_num();
    mpz_class nb = q0.im().raw().get_num();
    mpz_class norm = na * na + nb * nb;
    if (norm > mpz_class("1000000000000")) return std::nullopt;  // search cap

    std::vector<GaussianRational> candidates;
    mpz_class i = 1;
    for (; i * i <= norm; ++i) {
        if (norm % i != 0) continue;
        gaussian_with_norm(i, candidates);
        gaussian_with_norm(norm / i, candidates);
        if (candidates.size() > 400000) return std::nullopt;  // search cap
    }

    GaussianRational unit_i = GaussianRational::i();
    for (const auto& g : candidates) {
        GaussianRational cand = g;
        for (int u = 0; u < 4; ++u) {
            cand = cand * unit_i;
            GaussianRational root = cand / GaussianRational(scale);
            GaussianRational acc = c.back();
            for (size_t k = c.size() - 1; k-- > 0;) acc = acc * root + c[k];
            if (acc.is_zero()) return root;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<GaussianRational>> exact_spectrum(std::vector<GaussianRational> c) {
    if (c.empty() || c.back() != GaussianRational(1))
        throw Error("exact_spectrum expects a monic coefficient list");
    std::vector<GaussianRational> out;
    while (c.size() > 1) {
        if (c.front().is_zero()) {
            out.emplace_back(0);
            c.erase(c.begin());
            continue;
        }
        auto root = find_exact_root(c);
        if (!root.has_value()) return std::nullopt;
        out.push_back(*root);
        c = deflate_exact(c, *root);
    }
    return out;
}

std::optional<ExactPencilCertificate> property_l_exact_refutation(const QMatrix& a,
                                                                  const QMatrix& b) {
    a.require_square("property_l_exact_refutation");
    a.require_same_shape(b, "property_l_exact_refutation");
    const int n = a.rows();
    if (n > 8) return std::nullopt;

    auto lambda = exact_spectrum(charpoly(a));
    if (!lambda.has_value()) return std::nullopt;
    auto mu = exact_spectrum(charpoly(b));
    if (!mu.has_value()) return std::nullopt;

    MPoly pencil = pencil_charpoly(a, b).to_trivariate();
    MPoly t = MPoly::variable(3, 0), x = MPoly::variable(3, 1), y = MPoly::variable(3, 2);

    ExactPencilCertificate cert;
    cert.pencil = pencil.str({"t", "x", "y"});

    MPoly first_prod(3);
    bool have_first = false;
    for (const auto& pi : all_permutations(n)) {
        MPoly prod = MPoly::constant(3, GaussianRational(1));
        for (int j = 0; j < n; ++j) {
            MPoly factor = t - x.scaled((*lambda)[static_cast<size_t>(j)]) -
                           y.scaled((*mu)[static_cast<size_t>(pi[j])]);
            prod *= factor;
        }
        if (prod == pencil) {
            cert.equal = true;
            cert.pairing = pi;
            return cert;
        }
        if (!have_first) {
            first_prod = prod;
            have_first = true;
        }
    }

    cert.equal = false;
    // exhibit one coefficient where the pencil and a candidate factorization
    // differ, as an exact refutation artifact
    MPoly diff = pencil - first_prod;
    const MPoly::Term& lead = diff.terms().front();
    auto coefficient_at = [&](const MPoly& p) {
        for (const MPoly::Term& term : p.terms())
            if (term.exps == lead.exps) return term.coeff;
        return GaussianRational(0);
    };
    MPoly mono = MPoly::constant(3, GaussianRational(1));
    for (int v = 0; v < 3; ++v)
        for (int e = 0; e < lead.exps[static_cast<size_t>(v)]; ++e) mono *= MPoly::variable(3, v);
    cert.mismatch_monomial = mono.str({"t", "x", "y"});
    cert.mismatch_have = coefficient_at(pencil).str();
    cert.mismatch_want = coefficient_at(first_prod).str();
    return cert;
}

}  // namespace stc
