#include "stc/matrix.hpp"

#include <algorithm>

namespace stc {

std::set<int> KernelBasis::zero_coordinates() const {
    std::set<int> zero;
    for (int p = 0; p < ambient_dim; ++p) {
        bool all_zero = true;
        for (const auto& v : vectors)
            if (!v[p].is_zero()) { all_zero = false; break; }
        if (all_zero) zero.insert(p);
    }
    return zero;
}

std::vector<int> rref_in_place(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        GaussianRational inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            GaussianRational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

KernelBasis rref_kernel(const QMatrix& x) {
    QMatrix r = x;
    std::vector<int> pivots = rref_in_place(r);
    const int n = x.cols();

    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;

    KernelBasis basis;
    basis.ambient_dim = n;
    basis.rank_of_operator = static_cast<int>(pivots.size());
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<GaussianRational> v(n, GaussianRational(0));
        v[j] = GaussianRational(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), j);
        basis.vectors.push_back(std::move(v));
    }

    // Canonicalize the stacked basis itself: makes the output the RREF of
    // the kernel as a row space, deterministic across conventions.
    if (!basis.vectors.empty()) {
        QMatrix stacked(basis.dim(), n, GaussianRational(0));
        for (int i = 0; i < basis.dim(); ++i)
            for (int j = 0; j < n; ++j) stacked.at(i, j) = basis.vectors[i][j];
        rref_in_place(stacked);
        for (int i = 0; i < basis.dim(); ++i)
            for (int j = 0; j < n; ++j) basis.vectors[i][j] = stacked.at(i, j);
    }
    return basis;
}

int rank(const QMatrix& x) {
    QMatrix r = x;
    return static_cast<int>(rref_in_place(r).size());
}

GaussianRational det(const QMatrix& x) {
    x.require_square("det");
    // Fraction-free enough for our sizes: plain Gaussian elimination over Q(i),
    // tracking row swaps and pivot products.
    QMatrix m = x;
    const int n = m.rows();
    GaussianRational d(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) return GaussianRational(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        GaussianRational inv = m.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            GaussianRational f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

QMatrix inverse(const QMatrix& x) {
    x.require_square("inverse");
    const int n = x.rows();
    QMatrix aug(n, 2 * n, GaussianRational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
        aug.at(i, n + i) = GaussianRational(1);
    }
    std::vector<int> pivots = rref_in_place(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) throw SingularMatrix();
    QMatrix inv(n, n, GaussianRational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

bool is_nilpotent(const QMatrix& x) {
    x.require_square("is_nilpotent");
    const int n = x.rows();
    QMatrix p = x;
    int e = 1;
    while (e < n) {
        if (p.is_zero()) return true;
        p = p * p;
        e *= 2;
    }
    return p.is_zero();
}

QMatrix exp_nilpotent(const QMatrix& x, const Rational& t) {
    if (!is_nilpotent(x)) throw NotNilpotent();
    const int n = x.rows();
    QMatrix acc = QMatrix::identity(n, GaussianRational(0));
    QMatrix term = QMatrix::identity(n, GaussianRational(0));
    Rational factorial(1);
    GaussianRational gt(t);
    for (int k = 1; k < n; ++k) {
        term = term * x;
        term = term.scaled(gt);
        factorial = factorial * Rational(k);
        acc = acc + term.scaled(GaussianRational(Rational(1) / factorial));
    }
    return acc;
}

std::optional<std::vector<GaussianRational>> solve_linear(const QMatrix& m,
                                                          const std::vector<GaussianRational>& rhs) {
    if (rhs.size() != static_cast<size_t>(m.rows()))
        throw DimensionMismatch("rhs length does not match row count");
    QMatrix aug(m.rows(), m.cols() + 1, GaussianRational(0));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<int> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // row (0..0|1)
    std::vector<GaussianRational> u(m.cols(), GaussianRational(0));
    for (size_t k = 0; k < pivots.size(); ++k)
        u[pivots[k]] = aug.at(static_cast<int>(k), m.cols());
    return u;
}

}  // namespace stc
