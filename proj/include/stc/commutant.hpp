#ifndef STC_COMMUTANT_HPP
#define STC_COMMUTANT_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "stc/matrix.hpp"
#include "stc/mpoly.hpp"

namespace stc {

/// Kernel analysis of the operators psi : X -> AX - XA and phi = psi^2.
/// zero_pattern holds 1-based (row, col) positions that vanish in every
/// element of ker(phi), i.e. in every admissible B.
struct SylvesterReport {
    int n = 0;
    int dim_ker_psi = 0;
    int dim_ker_psi2 = 0;
    Rational index;  // (dim_ker_psi2 - dim_ker_psi) / n^2
    KernelBasis kernel_basis_psi2;
    std::set<std::pair<int, int>> zero_pattern;
};

/// Matrix of X -> AX - XA under row-major vectorization: A (x) I - I (x) A^T.
QMatrix sylvester_psi(const QMatrix& a);

/// Matrix of X -> A^2 X + X A^2 - 2 A X A, equal to psi^2.
QMatrix sylvester_phi(const QMatrix& a);

SylvesterReport analyze(const QMatrix& a);

/// Random element of ker(phi): integer combination of the kernel basis with
/// coefficients in [-coeff_bound, coeff_bound], deterministic per seed.
QMatrix sample_B(const SylvesterReport& report, uint64_t seed, long coeff_bound);

/// Generic element of ker(phi): sum x_k * basis_k over dim_ker_psi2 variables.
PolyMatrix symbolic_B(const SylvesterReport& report);

/// True iff A(AB-BA) = (AB-BA)A exactly.
bool commutes_with_commutator(const QMatrix& a, const QMatrix& b);

/// True iff the minimal polynomial has degree n (one Jordan block per
/// eigenvalue).
bool is_non_derogatory(const QMatrix& a);

/// Degree of the minimal polynomial, computed as the first k with A^k in
/// span{I, ..., A^(k-1)}.
int minimal_poly_degree(const QMatrix& a);

/// Coefficients c0..c(n-1) with X = sum c_k A^k, when X lies in the
/// polynomial span of A.
std::optional<std::vector<GaussianRational>> in_polynomial_span(const QMatrix& a, const QMatrix& x);

struct ShiftedPair {
    QMatrix a_shifted;
    QMatrix b_shifted;
    long lambda = 0;
    long mu = 0;
};

/// Replace (A, B) by (A + lambda*I, B + mu*I) with both parts invertible;
/// lambda, mu are the smallest nonnegative integers that work. The
/// commutator is unchanged.
ShiftedPair shift_to_invertible(const QMatrix& a, const QMatrix& b);

/// Exact certificate record for the nilpotency / spectrum-preservation
/// consequences of [AB-BA, A] = 0.
struct Prop3Certificates {
    bool c_nilpotent = false;
    long lambda = 0;  // shift applied to A
    long mu = 0;      // shift applied to B
    bool ainv_binv_c_nilpotent = false;
    bool binv_ainv_c_nilpotent = false;
    bool binv_c_nilpotent = false;
    bool spectrum_of_b_plus_tc_constant = false;
    bool a_nilpotent = false;
    bool conjugation_identity = false;  // checked only when a_nilpotent

    bool all_pass() const {
        return c_nilpotent && ainv_binv_c_nilpotent && binv_ainv_c_nilpotent &&
               binv_c_nilpotent && spectrum_of_b_plus_tc_constant &&
               (!a_nilpotent || conjugation_identity);
    }
};

/// Throws HypothesisViolated unless commutes_with_commutator(a, b).
Prop3Certificates prop3_certificates(const QMatrix& a, const QMatrix& b);

}  // namespace stc

#endif
