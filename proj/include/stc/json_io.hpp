#ifndef STC_JSON_IO_HPP
#define STC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "stc/commutant.hpp"
#include "stc/matrix.hpp"
#include "stc/mccoy.hpp"
#include "stc/spectral.hpp"

namespace stc {

using Json = nlohmann::ordered_json;

/// Matrix file format: { "rows": r, "cols": c, "entries": [canonical scalar
/// strings, row-major] }.
Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

/// Load from a file path, or from a built-in fixture via "@name".
QMatrix load_matrix(const std::string& spec);

Json to_json(const SylvesterReport& rep, bool include_basis);
Json to_json(const STReport<GaussianRational>& rep);
Json to_json(const STReport<MPoly>& rep);
Json to_json(const PropertyLReport& rep);
Json to_json(const Prop3Certificates& cert);
Json to_json(const PencilPoly& p);
Json to_json(const ExactPencilCertificate& cert);

}  // namespace stc

#endif
