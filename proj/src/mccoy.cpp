#include "stc/mccoy.hpp"

#include "stc/random.hpp"

namespace stc {

STReport<MPoly> st_test_symbolic(const QMatrix& a, const PolyMatrix& b_sym, STOptions opts) {
    a.require_square("st_test_symbolic");
    PolyMatrix a_lifted = lift_matrix(a, b_sym.at(0, 0).num_vars());
    return st_test<MPoly>(a_lifted, b_sym, opts);
}

std::vector<STReport<GaussianRational>> randomized_st_family(const QMatrix& a,
                                                             const SylvesterReport& report,
                                                             int trials, uint64_t seed,
                                                             STOptions opts) {
    if (trials < 1) throw Error("randomized_st_family needs at least one trial");
    Rng seeder(seed);
    std::vector<STReport<GaussianRational>> out;
    out.reserve(static_cast<size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        QMatrix b = sample_B(report, seeder.next(), 10);
        out.push_back(st_test(a, b, opts));
    }
    return out;
}

}  // namespace stc
