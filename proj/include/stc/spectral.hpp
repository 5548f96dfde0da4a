#ifndef STC_SPECTRAL_HPP
#define STC_SPECTRAL_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "stc/matrix.hpp"
#include "stc/mpoly.hpp"

namespace stc {

/// Exact characteristic polynomial of the pencil xA + yB: monic of degree n
/// in t, coefficient of t^k a bivariate polynomial in (x, y).
struct PencilPoly {
    int n = 0;
    std::vector<MPoly> t_coeffs;  // index k = coefficient of t^k, each in vars (x, y)

    /// Univariate coefficient list c0..cn of char(xA + yB) at a rational point.
    std::vector<GaussianRational> specialize(const GaussianRational& x,
                                             const GaussianRational& y) const;

    /// The same polynomial as a single trivariate element in vars (x, y, t).
    MPoly to_trivariate() const;

    /// Rendered in the variables x, y, t.
    std::string str() const;
};

PencilPoly pencil_charpoly(const QMatrix& a, const QMatrix& b);

/// All complex roots with multiplicity. Exact zero roots are deflated first;
/// the rest go through Durand-Kerner iteration (scaled-circle start, at most
/// 1000 sweeps, step tolerance 1e-13 relative) with one Newton polish.
/// Throws NoConvergence when the iteration stalls.
std::vector<std::complex<double>> roots(const std::vector<GaussianRational>& monic_coeffs);

enum class PLVerdict { HOLDS_NUMERICALLY, FAILS };

struct PLSample {
    Rational x;
    Rational y;
    double max_residual = 0.0;
};

/// Numeric property-L report. When the verdict holds, `pairing` maps the
/// index of each eigenvalue of A to the matched index of an eigenvalue of B,
/// and the same pairing fits every sample; per-sample residuals are those of
/// the reported pairing. On a failing run the residuals are the best
/// achievable by any pairing, which at the witness exceeds the tolerance.
struct PropertyLReport {
    PLVerdict verdict = PLVerdict::FAILS;
    std::optional<std::vector<int>> pairing;
    std::vector<PLSample> samples;
    double tol = 0.0;
    std::optional<PLSample> witness;

    bool holds() const { return verdict == PLVerdict::HOLDS_NUMERICALLY; }
};

/// Decide property L numerically: eigenvalue multisets are matched with
/// multiplicity; the pairing is fixed on the first generic sample and then
/// verified on fixed probes (1,0), (0,1), (1,1), (1,-1) and further random
/// samples. Supported up to n = 8 (the pairing search is exhaustive).
PropertyLReport property_l(const QMatrix& a, const QMatrix& b, int num_samples = 12,
                           double tol = 1e-8, uint64_t seed = 42);

/// Exact pencil factorization check, applicable when both spectra lie in
/// Q(i). Confirms char(xA+yB) = prod_j (t - x lambda_j - y mu_pi(j)) for some
/// pairing pi, or exhibits a differing coefficient. Absent when a spectrum
/// does not split over Q(i) (or exceeds the divisor-search caps).
struct ExactPencilCertificate {
    bool equal = false;
    std::vector<int> pairing;        // valid when equal
    std::string pencil;              // exact trivariate rendering
    std::string mismatch_monomial;   // when !equal: a monomial where they differ
    std::string mismatch_have;       // pencil coefficient at that monomial
    std::string mismatch_want;       // product coefficient at that monomial
};

std::optional<ExactPencilCertificate> property_l_exact_refutation(const QMatrix& a,
                                                                  const QMatrix& b);

/// Exact Q(i) spectrum of a monic polynomial, when it fully splits: candidate
/// Gaussian-integer roots are enumerated through divisors of the norm of the
/// scaled constant term. Absent when the polynomial does not split over Q(i)
/// or the search caps are exceeded.
std::optional<std::vector<GaussianRational>> exact_spectrum(std::vector<GaussianRational> monic_coeffs);

}  // namespace stc

#endif
