#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "rtp/network.hpp"

namespace rtp::cli {

// {"layers": [widths], "arcs": [{"from": [l, r], "to": [l, r], "weight": "p/q"}],
//  "sources": [rows], "sinks": [rows], "planar": bool}
nlohmann::json network_to_json(const WeightedNetwork& net);

// Weights may be JSON integers or "p/q" strings; floats are rejected.
// Throws ParseError on schema violations and PreconditionError when the
// network itself is malformed.
WeightedNetwork network_from_json(const nlohmann::json& j);

// Graphviz with pinned positions: layer l at x = l, row i at y = -i.
std::string network_to_dot(const WeightedNetwork& net);

// Exact rational from a JSON integer or string.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace rtp::cli
