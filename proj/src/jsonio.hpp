#pragma once

#include <json.hpp>

#include "symfunc.hpp"

namespace biham {

/// LaurentPoly as an object mapping exponent strings to rational strings,
/// e.g. {"1":"1","-1":"1"} for q + q^-1.
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

/// SymFunc schema:
/// {"truncation": N, "kind": "rational"|"laurent",
///  "terms": [{"exponents": [n1,...,nk], "coeff": <rational string | laurent object>}]}
nlohmann::json series_to_json(const SymQ& f);
nlohmann::json series_to_json(const SymL& f);
SymQ symq_from_json(const nlohmann::json& j);
SymL syml_from_json(const nlohmann::json& j);

}  // namespace biham
