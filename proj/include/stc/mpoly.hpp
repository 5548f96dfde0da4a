#ifndef STC_MPOLY_HPP
#define STC_MPOLY_HPP

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "stc/errors.hpp"
#include "stc/matrix.hpp"
#include "stc/rational.hpp"

namespace stc {

/// Sparse multivariate polynomial over Q(i), canonical form: terms sorted in
/// descending graded-lexicographic order, no zero coefficients. Equality is
/// representation equality.
class MPoly {
  public:
    struct Term {
        std::vector<uint8_t> exps;  // length = num_vars, per-variable degree
        GaussianRational coeff;
    };

    MPoly() = default;
    explicit MPoly(int num_vars) : nv_(num_vars) {}

    static MPoly constant(int num_vars, GaussianRational c);
    static MPoly variable(int num_vars, int index);  // 0-based index

    int num_vars() const { return nv_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero when absent).
    GaussianRational constant_value() const;
    int total_degree() const;  // -1 for the zero polynomial

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const GaussianRational& c) const;
    MPoly div_scalar(const GaussianRational& c) const;

    bool operator==(const MPoly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    GaussianRational eval(const std::vector<GaussianRational>& point) const;
    /// Substitute one variable by a constant; the variable count is unchanged.
    MPoly specialize(int var, const GaussianRational& value) const;

    /// "c*x1^e1*x2^e2 + ..." with unit exponents and unit coefficients elided.
    std::string str() const;
    std::string str(const std::vector<std::string>& var_names) const;

    /// Per-polynomial term ceiling; exceeding it raises SymbolicBlowup.
    static void set_term_limit(size_t limit) { term_limit_.store(limit); }
    static size_t term_limit() { return term_limit_.load(); }

  private:
    void check_vars(const MPoly& o) const {
        if (nv_ != o.nv_) throw VariableCountMismatch();
    }
    void guard_size() const;
    static bool grlex_less(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b);

    int nv_ = 0;
    std::vector<Term> terms_;
    static std::atomic<size_t> term_limit_;
};

inline bool operator==(const MPoly::Term& a, const MPoly::Term& b) {
    return a.exps == b.exps && a.coeff == b.coeff;
}

template <>
struct ScalarOps<MPoly> {
    static MPoly zero(const MPoly& like) { return MPoly(like.num_vars()); }
    static MPoly one(const MPoly& like) {
        return MPoly::constant(like.num_vars(), GaussianRational(1));
    }
    static MPoly from_int(const MPoly& like, long v) {
        return MPoly::constant(like.num_vars(), GaussianRational(v));
    }
    static MPoly div_int(const MPoly& x, long k) { return x.div_scalar(GaussianRational(k)); }
    static bool is_zero(const MPoly& x) { return x.is_zero(); }
};

using PolyMatrix = RMatrix<MPoly>;

/// Embed a Q(i) matrix into the polynomial ring with num_vars variables.
PolyMatrix lift_matrix(const QMatrix& m, int num_vars);

/// Entrywise evaluation of a polynomial matrix at a rational point.
QMatrix eval_matrix(const PolyMatrix& m, const std::vector<GaussianRational>& point);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace stc

#endif
