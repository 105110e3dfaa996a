#pragma once

#include <optional>

#include <json.hpp>

#include "netcheap/bias.hpp"
#include "netcheap/cheaptalk.hpp"
#include "netcheap/conference.hpp"
#include "netcheap/delta_poly.hpp"
#include "netcheap/graph.hpp"
#include "netcheap/myerson.hpp"

namespace netcheap {

using Json = nlohmann::json;

// {"n": <int>, "edges": [[i,j], ...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

// {"hyperedges": [[i,j,...], ...]}
ConferenceStructure conference_from_json(const Json& j);
Json conference_to_json(const ConferenceStructure& h);

// Sorted integer array.
NodeSet node_set_from_json(const Json& j);
Json node_set_to_json(NodeSet s);

Json rational_to_json(const Rational& q);  // "p/q" string

// {"coeffs": {"1": "2/3", ...}} plus "value"/"decimal" when delta is given.
Json poly_to_json(const DeltaPoly& p, const std::optional<Rational>& delta = std::nullopt);
DeltaPoly poly_from_json(const Json& j);

// node id -> serialized polynomial
Json allocation_to_json(const Allocation& a, const std::optional<Rational>& delta = std::nullopt);

Json bias_to_json(const BiasBreakdown& b, const ConversationSpec& conv,
                  const std::optional<Rational>& delta = std::nullopt);

Json equilibrium_to_json(const PartitionEquilibrium& eq);

}  // namespace netcheap
