#pragma once

// JSON encodings. QPoly: ascending list of "num/den" strings. QRat: {num, den}.
// SymFun: {"degree", "basis", "coeffs": [{"partition", "num", "den"}]}.
// PathCombination: {"n", "terms": [{"paths", "coeff"}]}.
// Every from_json throws ParseError on malformed input.

#include <json.hpp>

#include "chromsym/modlaw.hpp"
#include "chromsym/qalg.hpp"
#include "chromsym/symfun.hpp"

namespace chromsym {

using Json = nlohmann::json;

Json to_json(const QPoly& p);
Json to_json(const QRat& r);
Json to_json(const SymFun& f);
Json to_json(const PathCombination& c);

QPoly qpoly_from_json(const Json& j);
QRat qrat_from_json(const Json& j);
SymFun symfun_from_json(const Json& j);
PathCombination paths_from_json(const Json& j);

}  // namespace chromsym
