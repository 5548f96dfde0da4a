#include "stc/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace stc {

std::atomic<size_t> MPoly::term_limit_{5'000'000};

namespace {

int degree_of(const std::vector<uint8_t>& exps) {
    int d = 0;
    for (uint8_t e : exps) d += e;
    return d;
}

}  // namespace

bool MPoly::grlex_less(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    // same total degree: lexicographic, x1 strongest
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly MPoly::constant(int num_vars, GaussianRational c) {
    MPoly p(num_vars);
    if (!c.is_zero())
        p.terms_.push_back({std::vector<uint8_t>(static_cast<size_t>(num_vars), 0), std::move(c)});
    return p;
}

MPoly MPoly::variable(int num_vars, int index) {
    if (index < 0 || index >= num_vars)
        throw VariableCountMismatch();
    MPoly p(num_vars);
    std::vector<uint8_t> e(static_cast<size_t>(num_vars), 0);
    e[static_cast<size_t>(index)] = 1;
    p.terms_.push_back({std::move(e), GaussianRational(1)});
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exps) == 0);
}

GaussianRational MPoly::constant_value() const {
    if (!terms_.empty() && degree_of(terms_.back().exps) == 0) return terms_.back().coeff;
    return GaussianRational(0);
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return degree_of(terms_.front().exps);  // leading term has the largest degree
}

void MPoly::guard_size() const {
    if (terms_.size() > term_limit_.load(std::memory_order_relaxed))
        throw SymbolicBlowup(std::to_string(terms_.size()) + " terms exceeds ceiling " +
                             std::to_string(term_limit_.load()));
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (Term& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_vars(o);
    MPoly r(nv_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    // both operands sorted descending: merge
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const Term& a = terms_[i];
        const Term& b = o.terms_[j];
        if (a.exps == b.exps) {
            GaussianRational c = a.coeff + b.coeff;
            if (!c.is_zero()) r.terms_.push_back({a.exps, std::move(c)});
            ++i; ++j;
        } else if (grlex_less(b.exps, a.exps)) {
            r.terms_.push_back(a);
            ++i;
        } else {
            r.terms_.push_back(b);
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    r.guard_size();
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    check_vars(o);
    if (terms_.empty() || o.terms_.empty()) return MPoly(nv_);
    // iterate the smaller factor; each pass is a monomial shift of the larger
    const MPoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const MPoly& large = terms_.size() <= o.terms_.size() ? o : *this;
    MPoly acc(nv_);
    for (const Term& s : small.terms_) {
        MPoly shifted(nv_);
        shifted.terms_.reserve(large.terms_.size());
        for (const Term& t : large.terms_) {
            Term nt;
            nt.exps.resize(static_cast<size_t>(nv_));
            for (int v = 0; v < nv_; ++v) {
                unsigned e = static_cast<unsigned>(s.exps[v]) + t.exps[v];
                if (e > 255) throw Error("per-variable degree exceeds 255");
                nt.exps[static_cast<size_t>(v)] = static_cast<uint8_t>(e);
            }
            nt.coeff = s.coeff * t.coeff;
            shifted.terms_.push_back(std::move(nt));
        }
        // adding a fixed exponent vector preserves grlex order, so `shifted`
        // is already sorted
        acc = acc + shifted;
    }
    acc.guard_size();
    return acc;
}

MPoly MPoly::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return MPoly(nv_);
    MPoly r = *this;
    for (Term& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

MPoly MPoly::div_scalar(const GaussianRational& c) const {
    if (c.is_zero()) throw DivisionByZero();
    return scaled(c.inverse());
}

GaussianRational MPoly::eval(const std::vector<GaussianRational>& point) const {
    if (point.size() != static_cast<size_t>(nv_)) throw VariableCountMismatch();
    // memoized powers per variable
    std::vector<std::vector<GaussianRational>> powers(static_cast<size_t>(nv_));
    for (int v = 0; v < nv_; ++v) powers[static_cast<size_t>(v)] = {GaussianRational(1)};
    auto power = [&](int v, uint8_t e) -> const GaussianRational& {
        auto& tab = powers[static_cast<size_t>(v)];
        while (tab.size() <= e) tab.push_back(tab.back() * point[static_cast<size_t>(v)]);
        return tab[e];
    };
    GaussianRational acc(0);
    for (const Term& t : terms_) {
        GaussianRational m = t.coeff;
        for (int v = 0; v < nv_; ++v)
            if (t.exps[static_cast<size_t>(v)] != 0) m = m * power(v, t.exps[static_cast<size_t>(v)]);
        acc += m;
    }
    return acc;
}

MPoly MPoly::specialize(int var, const GaussianRational& value) const {
    if (var < 0 || var >= nv_) throw VariableCountMismatch();
    MPoly acc(nv_);
    std::vector<GaussianRational> powers = {GaussianRational(1)};
    for (const Term& t : terms_) {
        uint8_t e = t.exps[static_cast<size_t>(var)];
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Term nt = t;
        nt.exps[static_cast<size_t>(var)] = 0;
        nt.coeff = nt.coeff * powers[e];
        if (nt.coeff.is_zero()) continue;
        MPoly single(nv_);
        single.terms_.push_back(std::move(nt));
        acc = acc + single;
    }
    return acc;
}

std::string MPoly::str() const {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(nv_));
    for (int v = 1; v <= nv_; ++v) names.push_back("x" + std::to_string(v));
    return str(names);
}

std::string MPoly::str(const std::vector<std::string>& var_names) const {
    if (var_names.size() != static_cast<size_t>(nv_)) throw VariableCountMismatch();
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        std::string mono;
        for (int v = 0; v < nv_; ++v) {
            uint8_t e = t.exps[static_cast<size_t>(v)];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names[static_cast<size_t>(v)];
            if (e > 1) mono += "^" + std::to_string(static_cast<int>(e));
        }

        const GaussianRational& c = t.coeff;
        bool negative_real = c.is_real() && c.re().sign() < 0;
        if (k == 0) {
            if (negative_real) out += "-";
        } else {
            out += negative_real ? " - " : " + ";
        }
        GaussianRational cabs = negative_real ? -c : c;
        std::string cs = cabs.is_real() ? cabs.str() : "(" + cabs.str() + ")";
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

PolyMatrix lift_matrix(const QMatrix& m, int num_vars) {
    PolyMatrix r(m.rows(), m.cols(), MPoly(num_vars));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = MPoly::constant(num_vars, m.at(i, j));
    return r;
}

QMatrix eval_matrix(const PolyMatrix& m, const std::vector<GaussianRational>& point) {
    QMatrix r(m.rows(), m.cols(), GaussianRational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(point);
    return r;
}

}  // namespace stc
