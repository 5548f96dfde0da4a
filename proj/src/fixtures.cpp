#include "stc/fixtures.hpp"

namespace stc {
namespace fixtures {

QMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    QMatrix m(r, c, GaussianRational(0));
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionMismatch("ragged row in matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = GaussianRational(rows[i][j]);
    }
    return m;
}

QMatrix a0() {
    return from_ints({{0, 1, 0},
                      {0, 0, 0},
                      {0, 0, 0}});
}

QMatrix b0() {
    return from_ints({{0, 0, 0},
                      {0, 0, 1},
                      {1, 0, 0}});
}

QMatrix c0() { return commutator(a0(), b0()); }

QMatrix j2() {
    return from_ints({{0, 1},
                      {0, 0}});
}

QMatrix a1() { return direct_sum(j2(), j2()); }

QMatrix cyclic(int n) {
    QMatrix m(n, n, GaussianRational(0));
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = GaussianRational(1);
    m.at(n - 1, 0) = GaussianRational(1);
    return m;
}

QMatrix companion(const std::vector<GaussianRational>& c) {
    const int n = static_cast<int>(c.size());
    QMatrix m(n, n, GaussianRational(0));
    for (int i = 1; i < n; ++i) m.at(i, i - 1) = GaussianRational(1);
    for (int i = 0; i < n; ++i) m.at(i, n - 1) = -c[static_cast<size_t>(i)];
    return m;
}

std::optional<QMatrix> by_name(const std::string& name) {
    if (name == "a0") return a0();
    if (name == "b0") return b0();
    if (name == "c0") return c0();
    if (name == "a1") return a1();
    if (name == "j2") return j2();
    return std::nullopt;
}

std::vector<std::string> names() { return {"a0", "b0", "c0", "a1", "j2"}; }

}  // namespace fixtures
}  // namespace stc
