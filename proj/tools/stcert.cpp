#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stc/fixtures.hpp"
#include "stc/json_io.hpp"
#include "stc/scenarios.hpp"

using namespace stc;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

void emit(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

void emit_scenario_pretty(const ScenarioReport& rep) {
    std::cout << "scenario " << rep.name << (rep.pass ? "  [PASS]" : "  [FAIL]") << "\n";
    for (const auto& c : rep.claims) {
        std::cout << "  " << (c.pass ? "[pass] " : "[FAIL] ") << c.claim << "\n";
        std::cout << "         anchor: " << c.anchor << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "stcert: exact certificates for matrix pairs whose commutator AB-BA commutes with A"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may trail the subcommand

    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-oriented indented output");

    std::string a_path, b_path;
    uint64_t seed = 42;
    int trials = 5;
    int samples = 12;
    double tol = 1e-8;
    int max_len = 0;
    bool no_early_exit = false;
    int parallel = 1;
    long coeff_bound = 10;
    bool symbolic = false;
    bool with_basis = false;
    bool exact = false;
    bool randomized = false;
    std::vector<std::string> scenario_args;

    auto* commutes = app.add_subcommand(
        "commutes", "check that AB-BA commutes with A (the standing hypothesis)");
    commutes->add_option("--a", a_path, "matrix A (file or @fixture)")->required();
    commutes->add_option("--b", b_path, "matrix B (file or @fixture)")->required();

    auto* nilpotent = app.add_subcommand("nilpotent", "exact nilpotency check");
    nilpotent->add_option("--a", a_path, "matrix (file or @fixture)")->required();

    auto* st = app.add_subcommand(
        "st-test", "finite word-trace test for simultaneous triangularization");
    st->add_option("--a", a_path, "matrix A (file or @fixture)")->required();
    st->add_option("--b", b_path, "matrix B (file or @fixture)")->required();
    st->add_option("--max-len", max_len,
                   "word length bound (exploration only; default n^2-1 is the authoritative one)");
    st->add_flag("--no-early-exit", no_early_exit, "enumerate every word even after a witness");
    st->add_option("--parallel", parallel, "worker threads for subtree enumeration");

    auto* pl = app.add_subcommand("property-l", "numeric property-L decision");
    pl->add_option("--a", a_path, "matrix A (file or @fixture)")->required();
    pl->add_option("--b", b_path, "matrix B (file or @fixture)")->required();
    pl->add_option("--samples", samples, "number of pencil samples (default 12)");
    pl->add_option("--tol", tol, "residual tolerance (default 1e-8)");
    pl->add_option("--seed", seed, "sampling seed (default 42)");
    pl->add_flag("--exact", exact,
                 "attempt the exact pencil factorization check first (rational spectra)");

    auto* sylv = app.add_subcommand(
        "sylvester", "kernel analysis of psi = A(x)I - I(x)A^T and phi = psi^2");
    sylv->add_option("--a", a_path, "matrix (file or @fixture)")->required();
    sylv->add_flag("--basis", with_basis, "include the kernel basis of phi");

    auto* solveb = app.add_subcommand(
        "solve-b", "produce matrices B with [AB-BA, A] = 0 (sampled or symbolic)");
    solveb->add_option("--a", a_path, "matrix (file or @fixture)")->required();
    solveb->add_option("--seed", seed, "sampling seed (default 42)");
    solveb->add_option("--coeff-bound", coeff_bound, "integer coefficient bound (default 10)");
    solveb->add_flag("--symbolic", symbolic, "emit the generic solution with free parameters");

    auto* pencil = app.add_subcommand("char-pencil",
                                      "exact characteristic polynomial of the pencil xA + yB");
    pencil->add_option("--a", a_path, "matrix A (file or @fixture)")->required();
    pencil->add_option("--b", b_path, "matrix B (file or @fixture)")->required();

    auto* paper = app.add_subcommand(
        "paper", "run the bundled verification scenarios (prop3 prop5 prop6 prop9)");
    paper->add_option("scenarios", scenario_args, "scenario names (default: all)");
    paper->add_option("--seed", seed, "scenario seed (default 42)");
    paper->add_option("--trials", trials, "randomized fallback trials in prop9 (default 5)");
    paper->add_option("--samples", samples, "property-L samples (default 12)");
    paper->add_option("--tol", tol, "property-L tolerance (default 1e-8)");
    paper->add_flag("--randomized", randomized, "skip the symbolic route in prop9");
    paper->add_option("--parallel", parallel, "worker threads for word enumeration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (commutes->parsed()) {
            QMatrix a = load_matrix(a_path);
            QMatrix b = load_matrix(b_path);
            bool ok = commutes_with_commutator(a, b);
            Json j;
            j["commutes"] = ok;
            j["commutator"] = matrix_to_json(commutator(a, b));
            emit(j, pretty);
            return ok ? kExitHolds : kExitRefuted;
        }

        if (nilpotent->parsed()) {
            QMatrix a = load_matrix(a_path);
            bool ok = is_nilpotent(a);
            Json j;
            j["nilpotent"] = ok;
            j["n"] = a.rows();
            emit(j, pretty);
            return ok ? kExitHolds : kExitRefuted;
        }

        if (st->parsed()) {
            QMatrix a = load_matrix(a_path);
            QMatrix b = load_matrix(b_path);
            STOptions opts;
            opts.max_len = max_len;
            opts.early_exit = !no_early_exit;
            opts.threads = parallel;
            auto rep = st_test(a, b, opts);
            Json j = to_json(rep);
            j["authoritative_bound"] = max_len == 0 || max_len == a.rows() * a.rows() - 1;
            emit(j, pretty);
            return rep.is_st() ? kExitHolds : kExitRefuted;
        }

        if (pl->parsed()) {
            QMatrix a = load_matrix(a_path);
            QMatrix b = load_matrix(b_path);
            Json j;
            if (exact) {
                auto cert = property_l_exact_refutation(a, b);
                if (cert.has_value()) {
                    j["exact"] = to_json(*cert);
                    j["verdict"] = cert->equal ? "HOLDS_EXACTLY" : "FAILS";
                    emit(j, pretty);
                    return cert->equal ? kExitHolds : kExitRefuted;
                }
                j["exact"] = nullptr;  // spectra not in Q(i): fall back to numeric
            }
            auto rep = property_l(a, b, samples, tol, seed);
            j["numeric"] = to_json(rep);
            j["verdict"] = rep.holds() ? "HOLDS_NUMERICALLY" : "FAILS";
            emit(j, pretty);
            return rep.holds() ? kExitHolds : kExitRefuted;
        }

        if (sylv->parsed()) {
            QMatrix a = load_matrix(a_path);
            emit(to_json(analyze(a), with_basis), pretty);
            return kExitHolds;
        }

        if (solveb->parsed()) {
            QMatrix a = load_matrix(a_path);
            SylvesterReport rep = analyze(a);
            Json j;
            j["analysis"] = to_json(rep, false);
            if (symbolic) {
                PolyMatrix b = symbolic_B(rep);
                Json rows = Json::array();
                for (int i = 0; i < b.rows(); ++i) {
                    Json row = Json::array();
                    for (int k = 0; k < b.cols(); ++k) row.push_back(b.at(i, k).str());
                    rows.push_back(std::move(row));
                }
                j["symbolic_b"] = std::move(rows);
                j["free_parameters"] = rep.dim_ker_psi2;
            } else {
                QMatrix b = sample_B(rep, seed, coeff_bound);
                j["b"] = matrix_to_json(b);
                j["commutes"] = commutes_with_commutator(a, b);
            }
            emit(j, pretty);
            return kExitHolds;
        }

        if (pencil->parsed()) {
            QMatrix a = load_matrix(a_path);
            QMatrix b = load_matrix(b_path);
            emit(to_json(pencil_charpoly(a, b)), pretty);
            return kExitHolds;
        }

        if (paper->parsed()) {
            std::vector<std::string> names =
                scenario_args.empty() ? scenario_names() : scenario_args;
            ScenarioOptions opts;
            opts.seed = seed;
            opts.trials = trials;
            opts.threads = parallel;
            opts.force_randomized = randomized;
            opts.samples = samples;
            opts.tol = tol;
            bool all_pass = true;
            Json out = Json::array();
            for (const auto& name : names) {
                ScenarioReport rep = run_scenario(name, opts);
                all_pass = all_pass && rep.pass;
                if (pretty)
                    emit_scenario_pretty(rep);
                else
                    out.push_back(rep.to_json());
            }
            if (!pretty) emit(out, false);
            return all_pass ? kExitHolds : kExitRefuted;
        }
    } catch (const SymbolicBlowup& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
