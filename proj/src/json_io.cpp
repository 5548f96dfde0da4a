#include "stc/json_io.hpp"

#include <fstream>

#include "stc/fixtures.hpp"

namespace stc {

Json matrix_to_json(const QMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k) entries.push_back(m.at(i, k).str());
    j["entries"] = std::move(entries);
    return j;
}

QMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix JSON needs rows, cols, entries");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ParseError("rows and cols must be integers");
    int rows = j["rows"].get<int>();
    int cols = j["cols"].get<int>();
    if (rows <= 0 || cols <= 0) throw ParseError("rows and cols must be positive");
    const Json& entries = j["entries"];
    if (!entries.is_array() || entries.size() != static_cast<size_t>(rows) * cols)
        throw ParseError("entries length must equal rows*cols");
    QMatrix m(rows, cols, GaussianRational(0));
    size_t p = 0;
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k, ++p) {
            if (!entries[p].is_string()) throw ParseError("entries must be scalar strings");
            m.at(i, k) = GaussianRational::parse(entries[p].get<std::string>());
        }
    return m;
}

QMatrix load_matrix(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        auto fx = fixtures::by_name(spec.substr(1));
        if (!fx.has_value()) throw ParseError("unknown fixture '" + spec + "'");
        return *fx;
    }
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open matrix file '" + spec + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in '" + spec + "': " + e.what());
    }
    return matrix_from_json(j);
}

Json to_json(const SylvesterReport& rep, bool include_basis) {
    Json j;
    j["n"] = rep.n;
    j["dim_ker_psi"] = rep.dim_ker_psi;
    j["dim_ker_psi2"] = rep.dim_ker_psi2;
    j["index"] = rep.index.str();
    Json zp = Json::array();
    for (const auto& [r, c] : rep.zero_pattern) zp.push_back(Json::array({r, c}));
    j["zero_pattern"] = std::move(zp);
    if (include_basis) {
        Json basis = Json::array();
        for (const auto& v : rep.kernel_basis_psi2.vectors) {
            Json vec = Json::array();
            for (const auto& e : v) vec.push_back(e.str());
            basis.push_back(std::move(vec));
        }
        j["kernel_basis_psi2"] = std::move(basis);
        j["rank_of_phi"] = rep.kernel_basis_psi2.rank_of_operator;
    }
    return j;
}

namespace {

template <class S>
Json st_report_to_json(const STReport<S>& rep, const char* mode) {
    Json j;
    j["verdict"] = rep.is_st() ? "ST" : "NOT_ST";
    j["words_checked"] = rep.words_checked;
    j["max_len"] = rep.max_len;
    j["mode"] = mode;
    if (rep.witness.has_value()) {
        Json w;
        w["word"] = rep.witness->word.str();
        w["trace"] = rep.witness->trace.str();
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace

Json to_json(const STReport<GaussianRational>& rep) { return st_report_to_json(rep, "exact"); }
Json to_json(const STReport<MPoly>& rep) { return st_report_to_json(rep, "symbolic"); }

Json to_json(const PropertyLReport& rep) {
    Json j;
    j["verdict"] = rep.holds() ? "HOLDS_NUMERICALLY" : "FAILS";
    j["tol"] = rep.tol;
    if (rep.pairing.has_value()) j["pairing"] = *rep.pairing;
    else j["pairing"] = nullptr;
    Json samples = Json::array();
    for (const auto& s : rep.samples) {
        Json e;
        e["x"] = s.x.str();
        e["y"] = s.y.str();
        e["max_residual"] = s.max_residual;
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    if (rep.witness.has_value()) {
        Json w;
        w["x"] = rep.witness->x.str();
        w["y"] = rep.witness->y.str();
        w["max_residual"] = rep.witness->max_residual;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json to_json(const Prop3Certificates& cert) {
    Json j;
    j["c_nilpotent"] = cert.c_nilpotent;
    j["shift_lambda"] = cert.lambda;
    j["shift_mu"] = cert.mu;
    j["ainv_binv_c_nilpotent"] = cert.ainv_binv_c_nilpotent;
    j["binv_ainv_c_nilpotent"] = cert.binv_ainv_c_nilpotent;
    j["binv_c_nilpotent"] = cert.binv_c_nilpotent;
    j["spectrum_of_b_plus_tc_constant"] = cert.spectrum_of_b_plus_tc_constant;
    j["a_nilpotent"] = cert.a_nilpotent;
    if (cert.a_nilpotent) j["conjugation_identity"] = cert.conjugation_identity;
    j["all_pass"] = cert.all_pass();
    return j;
}

Json to_json(const PencilPoly& p) {
    Json j;
    j["n"] = p.n;
    j["polynomial"] = p.str();
    Json coeffs = Json::array();
    for (size_t k = 0; k < p.t_coeffs.size(); ++k) {
        Json c;
        c["t_power"] = k;
        c["coefficient"] = p.t_coeffs[static_cast<size_t>(k)].str({"x", "y"});
        coeffs.push_back(std::move(c));
    }
    j["t_coefficients"] = std::move(coeffs);
    return j;
}

Json to_json(const ExactPencilCertificate& cert) {
    Json j;
    j["equal"] = cert.equal;
    j["pencil"] = cert.pencil;
    if (cert.equal) {
        j["pairing"] = cert.pairing;
    } else {
        Json m;
        m["monomial"] = cert.mismatch_monomial;
        m["pencil_coefficient"] = cert.mismatch_have;
        m["factored_coefficient"] = cert.mismatch_want;
        j["mismatch"] = std::move(m);
    }
    return j;
}

}  // namespace stc
