#include "stc/scenarios.hpp"

#include "stc/fixtures.hpp"
#include "stc/random.hpp"

namespace stc {
namespace fx = fixtures;

Json ScenarioReport::to_json() const {
    Json j;
    j["scenario"] = name;
    Json cl = Json::array();
    for (const auto& c : claims) {
        Json e;
        e["claim"] = c.claim;
        e["anchor"] = c.anchor;
        e["pass"] = c.pass;
        e["computed"] = c.computed;
        cl.push_back(std::move(e));
    }
    j["claims"] = std::move(cl);
    j["pass"] = pass;
    return j;
}

namespace {

void add_claim(ScenarioReport& rep, std::string claim, std::string anchor, bool pass,
               Json computed) {
    rep.claims.push_back({std::move(claim), std::move(anchor), pass, std::move(computed)});
}

void finish(ScenarioReport& rep) {
    rep.pass = true;
    for (const auto& c : rep.claims) rep.pass = rep.pass && c.pass;
}

QMatrix random_rational_matrix(Rng& rng, int n, long num_bound, long den_bound) {
    QMatrix m(n, n, GaussianRational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = GaussianRational(rng.rational(num_bound, den_bound));
    return m;
}

QMatrix random_invertible(Rng& rng, int n) {
    for (;;) {
        QMatrix p = random_rational_matrix(rng, n, 3, 2);
        if (!det(p).is_zero()) return p;
    }
}

QMatrix conjugate(const QMatrix& a, const QMatrix& p) { return inverse(p) * a * p; }

// valid test matrices A for the standing hypothesis, mixing generic ones with
// derogatory shapes (the generic ones mostly force C = 0, the derogatory ones
// give nontrivial solution spaces)
QMatrix scenario_matrix_a(Rng& rng, int n, int kind) {
    switch (kind % 3) {
        case 0: {
            // conjugated derogatory nilpotent (rank-1 Jordan structure)
            QMatrix a(n, n, GaussianRational(0));
            a.at(0, 1) = GaussianRational(1);
            return conjugate(a, random_invertible(rng, n));
        }
        case 1: {
            // derogatory diagonalizable: repeated eigenvalue + distinct one
            QMatrix a(n, n, GaussianRational(0));
            Rational s = rng.rational(3, 2);
            for (int i = 0; i < n - 1; ++i) a.at(i, i) = GaussianRational(s);
            a.at(n - 1, n - 1) = GaussianRational(s + Rational(1 + rng.range(0, 2)));
            return conjugate(a, random_invertible(rng, n));
        }
        default:
            return random_rational_matrix(rng, n, 3, 2);
    }
}

// expand prod (t - r_k) into a monic coefficient list c0..c_{n-1} (without the
// leading 1), suitable for the companion constructor
std::vector<GaussianRational> companion_coeffs_from_roots(const std::vector<Rational>& rs) {
    std::vector<GaussianRational> c = {GaussianRational(1)};
    for (const Rational& r : rs) {
        std::vector<GaussianRational> next(c.size() + 1, GaussianRational(0));
        for (size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= GaussianRational(r) * c[k];
        }
        c = std::move(next);
    }
    c.pop_back();  // drop the monic leading coefficient
    return c;
}

ScenarioReport scenario_prop3(const ScenarioOptions& opts) {
    ScenarioReport rep;
    rep.name = "prop3";
    Rng rng(opts.seed);

    struct Pair {
        std::string label;
        QMatrix a, b;
    };
    std::vector<Pair> pairs;
    pairs.push_back({"fixture(a0,b0)", fx::a0(), fx::b0()});
    for (int k = 0; k < 10; ++k) {
        QMatrix a = scenario_matrix_a(rng, 3, k);
        QMatrix b = sample_B(analyze(a), rng.next(), 6);
        pairs.push_back({"random#" + std::to_string(k), a, b});
    }

    bool all_c_nilpotent = true, all_inverses = true, all_spectrum = true, all_conj = true,
         all_property_l = true;
    Json details = Json::array();
    for (const auto& p : pairs) {
        Prop3Certificates cert = prop3_certificates(p.a, p.b);
        PropertyLReport pl = property_l(p.b, commutator(p.a, p.b), opts.samples, opts.tol,
                                        rng.next());
        all_c_nilpotent = all_c_nilpotent && cert.c_nilpotent;
        all_inverses = all_inverses && cert.ainv_binv_c_nilpotent && cert.binv_ainv_c_nilpotent &&
                       cert.binv_c_nilpotent;
        all_spectrum = all_spectrum && cert.spectrum_of_b_plus_tc_constant;
        all_conj = all_conj && (!cert.a_nilpotent || cert.conjugation_identity);
        all_property_l = all_property_l && pl.holds();
        Json d;
        d["pair"] = p.label;
        d["certificates"] = to_json(cert);
        d["property_l_of_B_C"] = pl.holds() ? "HOLDS_NUMERICALLY" : "FAILS";
        details.push_back(std::move(d));
    }

    Json evidence;
    evidence["pairs_checked"] = pairs.size();
    evidence["details"] = std::move(details);

    add_claim(rep, "C = AB-BA is nilpotent for every valid pair",
              "C is a nilpotent matrix", all_c_nilpotent, evidence["pairs_checked"]);
    add_claim(rep, "(B, C) has property L for every valid pair",
              "the pair $(B,C)$ has property L", all_property_l, evidence["pairs_checked"]);
    add_claim(rep,
              "after shifting to invertible, A'^-1B'^-1C, B'^-1A'^-1C and B'^-1C are nilpotent",
              "$A^{-1}B^{-1}C,B^{-1}A^{-1}C$ and $B^{-1}C$ are nilpotent matrices", all_inverses,
              evidence["pairs_checked"]);
    add_claim(rep, "charpoly(B + tC) = charpoly(B) at n+1 rational points",
              "$\\sigma(B+tC)=\\sigma(B)$", all_spectrum, evidence["pairs_checked"]);
    add_claim(rep, "exact conjugation identity for nilpotent A",
              "$e^{tA}Be^{-tA}=B+tC$", all_conj, evidence["pairs_checked"]);
    rep.claims.back().computed = std::move(evidence);
    finish(rep);
    return rep;
}

ScenarioReport scenario_prop5(const ScenarioOptions& opts) {
    ScenarioReport rep;
    rep.name = "prop5";
    Rng rng(opts.seed + 5);

    bool all_nonderog = true, all_st = true, all_span = true;
    Json details = Json::array();
    for (int k = 0; k < 10; ++k) {
        int n = k % 2 == 0 ? 3 : 4;
        QMatrix a(1, 1, GaussianRational(0));
        if (k % 3 == 2) {
            // repeated-root companion: still non-derogatory, richer kernels
            std::vector<Rational> roots;
            Rational r = rng.rational(2, 1);
            roots.push_back(r);
            roots.push_back(r);
            for (int i = 2; i < n; ++i) roots.push_back(rng.rational(2, 1));
            a = fx::companion(companion_coeffs_from_roots(roots));
        } else {
            std::vector<GaussianRational> cs;
            for (int i = 0; i < n; ++i) cs.emplace_back(rng.rational(3, 2));
            a = fx::companion(cs);
        }
        QMatrix b = sample_B(analyze(a), rng.next(), 6);
        QMatrix c = commutator(a, b);

        bool nonderog = is_non_derogatory(a);
        STOptions st_opts;
        st_opts.threads = opts.threads;
        auto st = st_test(a, b, st_opts);
        auto span = in_polynomial_span(a, c);

        all_nonderog = all_nonderog && nonderog;
        all_st = all_st && st.is_st();
        all_span = all_span && span.has_value();

        Json d;
        d["n"] = n;
        d["non_derogatory"] = nonderog;
        d["st_verdict"] = st.is_st() ? "ST" : "NOT_ST";
        d["words_checked"] = st.words_checked;
        d["span_coefficients_present"] = span.has_value();
        details.push_back(std::move(d));
    }

    add_claim(rep, "companion-matrix inputs are non-derogatory",
              "the number of Jordan blocks of $A$ associated with $\\lambda$ is $1$",
              all_nonderog, Json(details.size()));
    add_claim(rep, "A and sampled B are simultaneously triangularizable",
              "$A$ and $B$ are $ST$", all_st, Json(details.size()));
    add_claim(rep, "C is a polynomial in A", "Necessarily, $C$ is a polynomial in $A$",
              all_span, std::move(details));
    finish(rep);
    return rep;
}

ScenarioReport scenario_prop6(const ScenarioOptions& opts) {
    ScenarioReport rep;
    rep.name = "prop6";
    Rng rng(opts.seed + 6);

    // part (i): n = 2 pairs are always ST
    bool all_st_n2 = true;
    int nontrivial = 0;
    for (int k = 0; k < 100; ++k) {
        QMatrix a(2, 2, GaussianRational(0));
        if (k % 2 == 0) {
            a = random_rational_matrix(rng, 2, 3, 2);
        } else {
            // conjugated scalar-plus-J2: the derogatory shape with a
            // nontrivial solution space
            QMatrix base = fx::j2();
            Rational s = rng.rational(3, 2);
            base.at(0, 0) = GaussianRational(s);
            base.at(1, 1) = GaussianRational(s);
            a = conjugate(base, random_invertible(rng, 2));
        }
        QMatrix b = sample_B(analyze(a), rng.next(), 6);
        if (!commutator(a, b).is_zero()) ++nontrivial;
        all_st_n2 = all_st_n2 && st_test(a, b).is_st();
    }
    Json n2;
    n2["pairs_checked"] = 100;
    n2["pairs_with_nonzero_commutator"] = nontrivial;
    add_claim(rep, "every n=2 pair with [C,A]=0 is ST",
              "If $n=2$ and $CA=AC$, then $A$ and $B$ are $ST$", all_st_n2, std::move(n2));

    // part (ii): the fixed counterexample pair
    QMatrix a0 = fx::a0(), b0 = fx::b0(), c0 = fx::c0();

    SylvesterReport an = analyze(a0);
    bool dims_ok = an.dim_ker_psi == 5 && an.dim_ker_psi2 == 8 && an.index == Rational(1, 3) &&
                   is_nilpotent(sylvester_psi(a0));
    add_claim(rep, "kernel dimensions and index of the n=3 derogatory matrix",
              "$dim(ker(\\psi))=5$, $dim(ker(\\psi^2))=8$ and $i(A_0)=\\dfrac{1}{3}$", dims_ok,
              to_json(an, false));

    PencilPoly pencil = pencil_charpoly(a0, b0);
    MPoly t = MPoly::variable(3, 0), x = MPoly::variable(3, 1), y = MPoly::variable(3, 2);
    bool pencil_ok = pencil.to_trivariate() == t * t * t - x * y * y;
    add_claim(rep, "pencil characteristic polynomial equals t^3 - x*y^2 exactly",
              "$\\chi_{tA_0+B}(x)=x^3-t$", pencil_ok, Json(pencil.str()));

    PropertyLReport pl = property_l(a0, b0, opts.samples, opts.tol, rng.next());
    auto refut = property_l_exact_refutation(a0, b0);
    bool fails = !pl.holds() && refut.has_value() && !refut->equal;
    Json plj;
    plj["numeric"] = to_json(pl);
    plj["exact"] = refut.has_value() ? to_json(*refut) : Json(nullptr);
    add_claim(rep, "the pair (A0, B) does not have property L",
              "$(A_0,B)$ has not property L because $\\sigma(A_0)=\\{0\\}$", fails,
              std::move(plj));

    GaussianRational tr = (b0 * b0 * c0 * c0).trace();
    add_claim(rep, "trace(B^2 C^2) = -1", "$Trace(B^2C^2)=-1$", tr == GaussianRational(-1),
              Json(tr.str()));

    STOptions full;
    full.early_exit = false;
    full.threads = opts.threads;
    auto st_bc = st_test(b0, c0, full);
    bool bc_ok = !st_bc.is_st() && st_bc.words_checked == 510;
    add_claim(rep, "B and C are not ST (510 words enumerated)",
              "$B$ and $C$ are not simultaneously triangularizable", bc_ok, to_json(st_bc));

    // padding to n = 4, 5 keeps every part of the counterexample
    bool pad_ok = true;
    Json pads = Json::array();
    for (int n = 4; n <= 5; ++n) {
        QMatrix z(n - 3, n - 3, GaussianRational(0));
        QMatrix a = direct_sum(a0, z);
        QMatrix b = direct_sum(b0, z);
        QMatrix c = commutator(a, b);
        bool commutes = commutes_with_commutator(a, b);
        bool pl_fails = !property_l(a, b, opts.samples, opts.tol, rng.next()).holds();
        GaussianRational tr_pad = (b * b * c * c).trace();
        bool trace_ok = tr_pad == GaussianRational(-1);
        STOptions ee;
        ee.threads = opts.threads;
        auto st = st_test(b, c, ee);
        bool not_st = !st.is_st();
        pad_ok = pad_ok && commutes && pl_fails && trace_ok && not_st;
        Json d;
        d["n"] = n;
        d["commutes"] = commutes;
        d["property_l_fails"] = pl_fails;
        d["trace_B2C2"] = tr_pad.str();
        d["st_verdict"] = st.is_st() ? "ST" : "NOT_ST";
        pads.push_back(std::move(d));
    }
    add_claim(rep, "zero-padded couples inherit the counterexample for n = 4, 5",
              "consider the couple $(A_0\\bigoplus{0}_{n-3},B_0\\bigoplus{0}_{n-3})$", pad_ok,
              std::move(pads));
    finish(rep);
    return rep;
}

ScenarioReport scenario_prop9(const ScenarioOptions& opts) {
    ScenarioReport rep;
    rep.name = "prop9";
    Rng rng(opts.seed + 9);

    QMatrix a1 = fx::a1();
    SylvesterReport an = analyze(a1);
    bool dims_ok = an.dim_ker_psi == 8 && an.dim_ker_psi2 == 12 && an.index == Rational(1, 4);
    add_claim(rep, "kernel dimensions and index of diag(J2, J2)",
              "$dim(ker(\\psi))=8$, $dim(ker(\\psi^2))=12$ and $i(A_1)=\\dfrac{1}{4}$", dims_ok,
              to_json(an, false));

    std::set<std::pair<int, int>> star = {{2, 1}, {2, 3}, {4, 1}, {4, 3}};
    bool star_ok = an.zero_pattern == star;
    Json starj = Json::array();
    for (const auto& [r, c] : an.zero_pattern) starj.push_back(Json::array({r, c}));
    add_claim(rep, "the solution family has zeros exactly at (2,1), (2,3), (4,1), (4,3)",
              "where each $*$ represents an arbitrary complex entry", star_ok, std::move(starj));

    // family-wide ST: symbolic route first, randomized fallback on blowup
    bool family_ok = false;
    Json familyj;
    bool ran_symbolic = false;
    if (!opts.force_randomized) {
        try {
            STOptions sym_opts;
            sym_opts.early_exit = false;
            sym_opts.threads = opts.threads;
            auto sym = st_test_symbolic(a1, symbolic_B(an), sym_opts);
            ran_symbolic = true;
            family_ok = sym.is_st() && sym.words_checked == 65534;
            familyj["route"] = "symbolic";
            familyj["report"] = to_json(sym);
            familyj["free_parameters"] = an.dim_ker_psi2;
        } catch (const SymbolicBlowup& e) {
            familyj["symbolic_aborted"] = e.what();
        }
    }
    if (!ran_symbolic) {
        STOptions ex_opts;
        ex_opts.early_exit = false;
        ex_opts.threads = opts.threads;
        auto runs = randomized_st_family(a1, an, opts.trials, rng.next(), ex_opts);
        family_ok = true;
        Json rj = Json::array();
        for (const auto& r : runs) {
            family_ok = family_ok && r.is_st() && r.words_checked == 65534;
            rj.push_back(to_json(r));
        }
        familyj["route"] = "randomized";
        familyj["trials"] = opts.trials;
        familyj["reports"] = std::move(rj);
    }
    add_claim(rep, "every word trace vanishes across the associated family (65534 words)",
              "the $65534$ considered matrices have a zero trace", family_ok, std::move(familyj));
    finish(rep);
    return rep;
}

}  // namespace

ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts) {
    if (name == "prop3") return scenario_prop3(opts);
    if (name == "prop5") return scenario_prop5(opts);
    if (name == "prop6") return scenario_prop6(opts);
    if (name == "prop9") return scenario_prop9(opts);
    throw UnknownScenario(name);
}

std::vector<std::string> scenario_names() { return {"prop3", "prop5", "prop6", "prop9"}; }

}  // namespace stc
