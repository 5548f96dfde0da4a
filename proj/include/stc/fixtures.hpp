#ifndef STC_FIXTURES_HPP
#define STC_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "stc/matrix.hpp"

namespace stc {
namespace fixtures {

/// Build a matrix from integer rows (convenience for fixtures and tests).
QMatrix from_ints(const std::vector<std::vector<long>>& rows);

/// n=3 derogatory nilpotent: single 1 in position (1,2).
QMatrix a0();

/// The n=3 companion counterexample to simultaneous triangularization:
/// zero first row, ones at (2,3) and (3,1). Nilpotent of index 3.
QMatrix b0();

/// c0 = a0*b0 - b0*a0: ones at (1,3), minus one at (3,2).
QMatrix c0();

/// Nilpotent Jordan block of size 2.
QMatrix j2();

/// n=4 block-diagonal diag(J2, J2).
QMatrix a1();

/// Cyclic permutation matrix of size n (ones on the superdiagonal and at (n,1)).
QMatrix cyclic(int n);

/// Companion matrix of the monic polynomial t^n + c[n-1] t^(n-1) + ... + c[0];
/// non-derogatory by construction.
QMatrix companion(const std::vector<GaussianRational>& c);

/// Named fixture lookup used by the CLI ("a0", "b0", "c0", "a1", "j2").
std::optional<QMatrix> by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace fixtures
}  // namespace stc

#endif
