#pragma once

#include "json.hpp"
#include <string>
#include <string_view>

#include "qfg/fgraph.hpp"
#include "qfg/lweight.hpp"
#include "qfg/primality.hpp"

namespace qfg {

/// Parses whitespace-separated `color:center:length[@coset]` tokens. Repeated
/// tokens accumulate multiplicity. Throws SyntaxError (with the character
/// offset), InvalidNode or NonPositiveLength.
DrinfeldPoly parse_poly(std::string_view text, const DynkinA& rank);
std::string format_poly(const DrinfeldPoly& p);

nlohmann::json poly_to_json(const DrinfeldPoly& p);
DrinfeldPoly poly_from_json(const nlohmann::json& j, const DynkinA& rank);

nlohmann::json graph_to_json(const FactGraph& g);
/// Throws SyntaxError on schema violations.
FactGraph graph_from_json(const nlohmann::json& j);

/// Vertex label "weight/color", arrow label = exponent. With `hasse` only the
/// transitive reduction is drawn.
std::string graph_to_dot(const FactGraph& g, bool hasse = false);

nlohmann::json verdict_to_json(const Verdict& v, const FactGraph& g);

}  // namespace qfg
