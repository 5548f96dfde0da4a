#ifndef STC_MATRIX_HPP
#define STC_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stc/errors.hpp"
#include "stc/rational.hpp"

namespace stc {

// Ring operations a scalar type must provide beyond +,-,*. "like" supplies
// construction context (e.g. the variable count of a polynomial ring).
template <class S>
struct ScalarOps {
    static S zero(const S& /*like*/) { return S(0); }
    static S one(const S& /*like*/) { return S(1); }
    static S from_int(const S& /*like*/, long v) { return S(v); }
    static S div_int(const S& x, long k) { return x / S(k); }
    static bool is_zero(const S& x) { return x.is_zero(); }
};

/// Dense row-major matrix over a commutative ring S containing Q.
template <class S>
class RMatrix {
  public:
    RMatrix(int rows, int cols, S fill)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
        if (rows <= 0 || cols <= 0) throw DimensionMismatch("matrix dimensions must be positive");
    }
    RMatrix(int rows, int cols, std::vector<S> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (rows <= 0 || cols <= 0) throw DimensionMismatch("matrix dimensions must be positive");
        if (e_.size() != static_cast<size_t>(rows) * cols)
            throw DimensionMismatch("entry count does not match rows*cols");
    }

    static RMatrix zeros(int rows, int cols, const S& like) {
        return RMatrix(rows, cols, ScalarOps<S>::zero(like));
    }
    static RMatrix identity(int n, const S& like) {
        RMatrix m = zeros(n, n, like);
        for (int i = 0; i < n; ++i) m.at(i, i) = ScalarOps<S>::one(like);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const S& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    S& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return at(i, j); }
    S& operator()(int i, int j) { return at(i, j); }
    const std::vector<S>& entries() const { return e_; }

    bool operator==(const RMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const RMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const S& x : e_)
            if (!ScalarOps<S>::is_zero(x)) return false;
        return true;
    }

    RMatrix operator-() const {
        RMatrix r = *this;
        for (S& x : r.e_) x = -x;
        return r;
    }
    RMatrix operator+(const RMatrix& o) const {
        require_same_shape(o, "+");
        RMatrix r = *this;
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
        return r;
    }
    RMatrix operator-(const RMatrix& o) const {
        require_same_shape(o, "-");
        RMatrix r = *this;
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
        return r;
    }
    RMatrix operator*(const RMatrix& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("cannot multiply " + shape_str() + " by " + o.shape_str());
        RMatrix r = zeros(rows_, o.cols_, e_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const S& a = at(i, k);
                if (ScalarOps<S>::is_zero(a)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (ScalarOps<S>::is_zero(o.at(k, j))) continue;
                    r.at(i, j) += a * o.at(k, j);
                }
            }
        return r;
    }

    RMatrix scaled(const S& c) const {
        RMatrix r = *this;
        for (S& x : r.e_) x = x * c;
        return r;
    }

    RMatrix transpose() const {
        RMatrix r(cols_, rows_, e_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    S trace() const {
        require_square("trace");
        S t = at(0, 0);
        for (int i = 1; i < rows_; ++i) t += at(i, i);
        return t;
    }

    RMatrix pow(uint64_t k) const {
        require_square("pow");
        RMatrix acc = identity(rows_, e_[0]);
        RMatrix base = *this;
        while (k) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    /// Row-major vectorization, length rows*cols.
    std::vector<S> vec() const { return e_; }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

    void require_square(const char* what) const {
        if (!is_square()) throw DimensionMismatch(std::string(what) + " requires a square matrix");
    }
    void require_same_shape(const RMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(std::string(what) + " on " + shape_str() + " and " + o.shape_str());
    }

  private:
    RMatrix(int rows, int cols, const S& fill, int)  // internal, unchecked
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {}

    int rows_;
    int cols_;
    std::vector<S> e_;
};

template <class S>
RMatrix<S> commutator(const RMatrix<S>& a, const RMatrix<S>& b) {
    a.require_square("commutator");
    a.require_same_shape(b, "commutator");
    return a * b - b * a;
}

/// Kronecker product; block (i,j) of the result is x(i,j) * y.
template <class S>
RMatrix<S> kron(const RMatrix<S>& x, const RMatrix<S>& y) {
    RMatrix<S> r = RMatrix<S>::zeros(x.rows() * y.rows(), x.cols() * y.cols(), x.at(0, 0));
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            if (ScalarOps<S>::is_zero(x.at(i, j))) continue;
            for (int p = 0; p < y.rows(); ++p)
                for (int q = 0; q < y.cols(); ++q)
                    r.at(i * y.rows() + p, j * y.cols() + q) = x.at(i, j) * y.at(p, q);
        }
    return r;
}

template <class S>
RMatrix<S> direct_sum(const RMatrix<S>& x, const RMatrix<S>& y) {
    RMatrix<S> r = RMatrix<S>::zeros(x.rows() + y.rows(), x.cols() + y.cols(), x.at(0, 0));
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j) r.at(x.rows() + i, x.cols() + j) = y.at(i, j);
    return r;
}

/// Characteristic polynomial det(tI - X) by Faddeev-LeVerrier: needs only
/// ring operations and exact division by integers, so it works unchanged
/// over Q(i) and over polynomial rings. Returns c[0..n] with c[n] = 1 and
/// det(tI - X) = sum c[k] t^k.
template <class S>
std::vector<S> charpoly(const RMatrix<S>& x) {
    x.require_square("charpoly");
    const int n = x.rows();
    const S& like = x.at(0, 0);
    std::vector<S> c(static_cast<size_t>(n) + 1, ScalarOps<S>::zero(like));
    c[n] = ScalarOps<S>::one(like);
    RMatrix<S> m = RMatrix<S>::zeros(n, n, like);
    for (int k = 1; k <= n; ++k) {
        m = x * m;
        for (int i = 0; i < n; ++i) m.at(i, i) += c[n - k + 1];
        S t = (x * m).trace();
        c[n - k] = -ScalarOps<S>::div_int(t, k);
    }
    return c;
}

/// Evaluate a coefficient list at the matrix itself (Cayley-Hamilton checks).
template <class S>
RMatrix<S> eval_poly_at(const std::vector<S>& coeffs, const RMatrix<S>& x) {
    x.require_square("eval_poly_at");
    const S& like = x.at(0, 0);
    RMatrix<S> acc = RMatrix<S>::zeros(x.rows(), x.cols(), like);
    RMatrix<S> p = RMatrix<S>::identity(x.rows(), like);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) p = p * x;
        if (!ScalarOps<S>::is_zero(coeffs[k])) acc = acc + p.scaled(coeffs[k]);
    }
    return acc;
}

using QMatrix = RMatrix<GaussianRational>;

/// Canonical kernel basis of a linear operator, as produced by rref_kernel.
struct KernelBasis {
    int ambient_dim = 0;
    std::vector<std::vector<GaussianRational>> vectors;
    int rank_of_operator = 0;

    int dim() const { return static_cast<int>(vectors.size()); }
    /// 0-based coordinates that vanish in every basis vector.
    std::set<int> zero_coordinates() const;
};

/// Reduced row echelon form (in place); returns pivot column indices.
/// Pivot choice: first nonzero entry of the column (arithmetic is exact).
std::vector<int> rref_in_place(QMatrix& m);

/// Canonical RREF basis of ker(X); rank_of_operator = rank(X).
KernelBasis rref_kernel(const QMatrix& x);

int rank(const QMatrix& x);
GaussianRational det(const QMatrix& x);

/// Exact inverse; throws SingularMatrix when det = 0.
QMatrix inverse(const QMatrix& x);

/// True iff X^n = 0 exactly (n = size); computed by repeated squaring.
bool is_nilpotent(const QMatrix& x);

/// Finite exponential sum for nilpotent X: sum_{k<index} (tX)^k / k!.
/// Throws NotNilpotent otherwise.
QMatrix exp_nilpotent(const QMatrix& x, const Rational& t);

/// Solve M * u = rhs exactly; empty optional when inconsistent. Free
/// variables are set to zero (RREF particular solution).
std::optional<std::vector<GaussianRational>> solve_linear(const QMatrix& m,
                                                          const std::vector<GaussianRational>& rhs);

}  // namespace stc

#endif
