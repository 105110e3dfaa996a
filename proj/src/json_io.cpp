#include "netcheap/json_io.hpp"

#include <string>
#include <vector>

namespace netcheap {

namespace {

Error schema_error(const std::string& what) { return Error("invalid_json", what); }

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw schema_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw schema_error("graph needs an object with \"n\"");
  const int n = as_int(j.at("n"), "n");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw schema_error("\"edges\" must be an array");
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw schema_error("each edge must be a pair [i, j]");
      edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
  }
  return build_graph(n, edges);
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.node_count()}, {"edges", edges}};
}

NodeSet node_set_from_json(const Json& j) {
  if (!j.is_array()) throw schema_error("node set must be an integer array");
  NodeSet s;
  for (const Json& v : j) s.insert(as_int(v, "node id"));
  return s;
}

Json node_set_to_json(NodeSet s) {
  Json out = Json::array();
  for (NodeId v : s) out.push_back(v);
  return out;
}

ConferenceStructure conference_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("hyperedges") || !j.at("hyperedges").is_array())
    throw schema_error("conference structure needs {\"hyperedges\": [...]}");
  std::vector<NodeSet> hyperedges;
  for (const Json& h : j.at("hyperedges")) hyperedges.push_back(node_set_from_json(h));
  return ConferenceStructure(std::move(hyperedges));
}

Json conference_to_json(const ConferenceStructure& h) {
  Json edges = Json::array();
  for (NodeSet e : h.hyperedges()) edges.push_back(node_set_to_json(e));
  return {{"hyperedges", edges}};
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json poly_to_json(const DeltaPoly& p, const std::optional<Rational>& delta) {
  Json coeffs = Json::object();
  for (const auto& [power, c] : p.coefficients()) coeffs[std::to_string(power)] = to_string(c);
  Json out = {{"coeffs", coeffs}, {"text", to_string(p)}};
  if (delta) {
    const Rational v = p(*delta);
    out["value"] = to_string(v);
    out["decimal"] = to_decimal(v);
  }
  return out;
}

DeltaPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_object())
    throw schema_error("polynomial needs {\"coeffs\": {...}}");
  DeltaPoly p;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    std::size_t used = 0;
    unsigned long power = 0;
    try {
      power = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty() || power > 1024)
      throw schema_error("bad power '" + key + "'");
    if (!value.is_string()) throw schema_error("coefficients must be \"p/q\" strings");
    p += DeltaPoly::monomial(static_cast<unsigned>(power), parse_rational(value.get<std::string>()));
  }
  return p;
}

Json allocation_to_json(const Allocation& a, const std::optional<Rational>& delta) {
  Json out = Json::object();
  for (const auto& [id, pay] : a.payoffs) out[std::to_string(id)] = poly_to_json(pay, delta);
  return out;
}

Json bias_to_json(const BiasBreakdown& b, const ConversationSpec& conv,
                  const std::optional<Rational>& delta) {
  Json witnesses = Json::array();
  for (const WitnessComponents& w : b.witnesses)
    witnesses.push_back({{"witness", w.witness},
                         {"sender_over_witness", poly_to_json(w.sender_loss, delta)},
                         {"witness_over_receiver", poly_to_json(w.witness_loss, delta)}});
  return {{"sender", conv.sender},
          {"receiver", conv.receiver},
          {"conference", node_set_to_json(conv.conference)},
          {"sender_over_receiver", poly_to_json(b.sender_receiver, delta)},
          {"witnesses", witnesses},
          {"b_eff", poly_to_json(b.effective, delta)}};
}

Json equilibrium_to_json(const PartitionEquilibrium& eq) {
  Json boundaries = Json::array();
  for (const Rational& t : eq.boundaries) boundaries.push_back(to_string(t));
  Json actions = Json::array();
  for (const Rational& a : eq.actions) actions.push_back(to_string(a));
  return {{"N", eq.n_partitions},
          {"boundaries", boundaries},
          {"actions", actions},
          {"b_eff", {{"exact", to_string(eq.b_eff_value)}, {"decimal", to_decimal(eq.b_eff_value)}}},
          {"residual_max",
           {{"exact", to_string(eq.verification.max_residual)},
            {"decimal", to_decimal(eq.verification.max_residual)}}}};
}

}  // namespace netcheap
