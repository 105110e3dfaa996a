#pragma once

#include <vector>

#include "netcheap/delta_poly.hpp"
#include "netcheap/graph.hpp"

namespace netcheap {

// A hypergraph of conferences. Each hyperedge has at least two members;
// hyperedges are kept sorted and unique.
class ConferenceStructure {
 public:
  ConferenceStructure() = default;
  explicit ConferenceStructure(std::vector<NodeSet> hyperedges);

  const std::vector<NodeSet>& hyperedges() const { return hyperedges_; }
  std::size_t size() const { return hyperedges_.size(); }
  bool empty() const { return hyperedges_.empty(); }
  bool contains(NodeSet hyperedge) const;

  // Union of all members.
  NodeSet support() const;

  ConferenceStructure with(NodeSet hyperedge) const;

  friend bool operator==(const ConferenceStructure&, const ConferenceStructure&) = default;

 private:
  std::vector<NodeSet> hyperedges_;
};

// One two-member conference per edge of g.
ConferenceStructure dyadic_conferences(const Graph& g);

// Keeps the hyperedges lying entirely inside x.
ConferenceStructure restrict_conferences(const ConferenceStructure& h, NodeSet x);

// Partition of s by connectivity through the hyperedges contained in s.
// Blocks are ordered by smallest member.
std::vector<NodeSet> conference_components(NodeSet s, const ConferenceStructure& h);

// 2 * sum_t U_t(G[s]) d^t.
DeltaPoly distance_worth(const Graph& g, NodeSet s);

// Sum of distance_worth over the blocks of conference_components(c, h);
// each block is measured on the induced subgraph of the base graph.
DeltaPoly restricted_worth(const Graph& g, const ConferenceStructure& h, NodeSet c);

}  // namespace netcheap
