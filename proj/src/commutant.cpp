#include "stc/commutant.hpp"

#include "stc/random.hpp"

namespace stc {

QMatrix sylvester_psi(const QMatrix& a) {
    a.require_square("sylvester_psi");
    QMatrix id = QMatrix::identity(a.rows(), GaussianRational(0));
    return kron(a, id) - kron(id, a.transpose());
}

QMatrix sylvester_phi(const QMatrix& a) {
    QMatrix psi = sylvester_psi(a);
    return psi * psi;
}

SylvesterReport analyze(const QMatrix& a) {
    a.require_square("analyze");
    const int n = a.rows();
    SylvesterReport rep;
    rep.n = n;
    QMatrix psi = sylvester_psi(a);
    rep.dim_ker_psi = rref_kernel(psi).dim();
    rep.kernel_basis_psi2 = rref_kernel(psi * psi);
    rep.dim_ker_psi2 = rep.kernel_basis_psi2.dim();
    rep.index = Rational(rep.dim_ker_psi2 - rep.dim_ker_psi) /
                Rational(static_cast<long>(n) * n);
    for (int p : rep.kernel_basis_psi2.zero_coordinates())
        rep.zero_pattern.insert({p / n + 1, p % n + 1});
    return rep;
}

QMatrix sample_B(const SylvesterReport& report, uint64_t seed, long coeff_bound) {
    const int n = report.n;
    Rng rng(seed);
    QMatrix b(n, n, GaussianRational(0));
    for (const auto& v : report.kernel_basis_psi2.vectors) {
        GaussianRational c(rng.range(-coeff_bound, coeff_bound));
        if (c.is_zero()) continue;
        for (int p = 0; p < n * n; ++p)
            b.at(p / n, p % n) += c * v[static_cast<size_t>(p)];
    }
    return b;
}

PolyMatrix symbolic_B(const SylvesterReport& report) {
    const int n = report.n;
    const int d = report.kernel_basis_psi2.dim();
    PolyMatrix b(n, n, MPoly(d));
    for (int k = 0; k < d; ++k) {
        const auto& v = report.kernel_basis_psi2.vectors[static_cast<size_t>(k)];
        MPoly xk = MPoly::variable(d, k);
        for (int p = 0; p < n * n; ++p) {
            if (v[static_cast<size_t>(p)].is_zero()) continue;
            b.at(p / n, p % n) += xk.scaled(v[static_cast<size_t>(p)]);
        }
    }
    return b;
}

bool commutes_with_commutator(const QMatrix& a, const QMatrix& b) {
    a.require_square("commutes_with_commutator");
    a.require_same_shape(b, "commutes_with_commutator");
    QMatrix c = commutator(a, b);
    return (a * c) == (c * a);
}

int minimal_poly_degree(const QMatrix& a) {
    a.require_square("minimal_poly_degree");
    const int n = a.rows();
    // rows are vec(A^0), vec(A^1), ...; the minimal polynomial degree is the
    // first k where adding vec(A^k) does not raise the rank
    QMatrix powers(n + 1, n * n, GaussianRational(0));
    QMatrix p = QMatrix::identity(n, GaussianRational(0));
    for (int k = 0; k <= n; ++k) {
        std::vector<GaussianRational> v = p.vec();
        for (int j = 0; j < n * n; ++j) powers.at(k, j) = v[static_cast<size_t>(j)];
        if (k < n) p = p * a;
    }
    for (int k = 1; k <= n; ++k) {
        QMatrix head(k + 1, n * n, GaussianRational(0));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < n * n; ++j) head.at(i, j) = powers.at(i, j);
        if (rank(head) == k) return k;  // vec(A^k) dependent on lower powers
    }
    return n;
}

bool is_non_derogatory(const QMatrix& a) { return minimal_poly_degree(a) == a.rows(); }

std::optional<std::vector<GaussianRational>> in_polynomial_span(const QMatrix& a, const QMatrix& x) {
    a.require_square("in_polynomial_span");
    a.require_same_shape(x, "in_polynomial_span");
    const int n = a.rows();
    // columns are vec(A^0) .. vec(A^(n-1)); degree < n suffices by
    // Cayley-Hamilton
    QMatrix m(n * n, n, GaussianRational(0));
    QMatrix p = QMatrix::identity(n, GaussianRational(0));
    for (int k = 0; k < n; ++k) {
        std::vector<GaussianRational> v = p.vec();
        for (int i = 0; i < n * n; ++i) m.at(i, k) = v[static_cast<size_t>(i)];
        p = p * a;
    }
    return solve_linear(m, x.vec());
}

ShiftedPair shift_to_invertible(const QMatrix& a, const QMatrix& b) {
    a.require_square("shift_to_invertible");
    a.require_same_shape(b, "shift_to_invertible");
    QMatrix id = QMatrix::identity(a.rows(), GaussianRational(0));
    ShiftedPair out{a, b, 0, 0};
    // a matrix has at most n integer eigenvalues, so both searches terminate
    for (long lam = 0;; ++lam) {
        QMatrix cand = a + id.scaled(GaussianRational(lam));
        if (!det(cand).is_zero()) {
            out.a_shifted = cand;
            out.lambda = lam;
            break;
        }
    }
    for (long mu = 0;; ++mu) {
        QMatrix cand = b + id.scaled(GaussianRational(mu));
        if (!det(cand).is_zero()) {
            out.b_shifted = cand;
            out.mu = mu;
            break;
        }
    }
    return out;
}

Prop3Certificates prop3_certificates(const QMatrix& a, const QMatrix& b) {
    if (!commutes_with_commutator(a, b))
        throw HypothesisViolated("AB-BA does not commute with A");

    const int n = a.rows();
    QMatrix c = commutator(a, b);
    Prop3Certificates cert;
    cert.c_nilpotent = is_nilpotent(c);

    ShiftedPair s = shift_to_invertible(a, b);
    cert.lambda = s.lambda;
    cert.mu = s.mu;
    QMatrix ai = inverse(s.a_shifted);
    QMatrix bi = inverse(s.b_shifted);
    cert.ainv_binv_c_nilpotent = is_nilpotent(ai * bi * c);
    cert.binv_ainv_c_nilpotent = is_nilpotent(bi * ai * c);
    cert.binv_c_nilpotent = is_nilpotent(bi * c);

    // spectrum preservation: each charpoly coefficient of B + tC is a
    // polynomial of degree <= n in t, so equality at n+1 points is equality
    std::vector<GaussianRational> base = charpoly(b);
    cert.spectrum_of_b_plus_tc_constant = true;
    for (long t = 0; t <= n; ++t) {
        QMatrix bt = b + c.scaled(GaussianRational(t));
        if (charpoly(bt) != base) {
            cert.spectrum_of_b_plus_tc_constant = false;
            break;
        }
    }

    cert.a_nilpotent = is_nilpotent(a);
    if (cert.a_nilpotent) {
        cert.conjugation_identity = true;
        const Rational ts[] = {Rational(1), Rational(1, 2), Rational(-2, 3)};
        for (const Rational& t : ts) {
            QMatrix lhs = exp_nilpotent(a, t) * b * exp_nilpotent(a, Rational(0) - t);
            QMatrix rhs = b + c.scaled(GaussianRational(t));
            if (lhs != rhs) {
                cert.conjugation_identity = false;
                break;
            }
        }
    }
    return cert;
}

}  // namespace stc
