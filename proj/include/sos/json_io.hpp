#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sos/conditions.hpp"
#include "sos/gram.hpp"
#include "sos/moment.hpp"
#include "sos/polynomial.hpp"
#include "sos/univariate.hpp"

namespace sos {

using Json = nlohmann::ordered_json;

/// {"n":2,"d":2,"terms":[{"alpha":[2,1],"c":"-1"}]} with coefficients as
/// exact integer or "p/q" strings (plain JSON integers also accepted on
/// input; floats rejected).
Json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const Json& j);

/// One object or an array of objects.
std::vector<Polynomial> polys_from_json(const Json& j);

Json report_to_json(const ConditionReport& report);
Json verdict_to_json(const OracleVerdict& verdict);

Json unipoly_to_json(const UniPoly& p);
std::string unipoly_text(const UniPoly& p);

Json moments_to_json(const MomentSequence& y);

}  // namespace sos
