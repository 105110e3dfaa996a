#include "netcheap/conference.hpp"

#include <algorithm>
#include <string>

namespace netcheap {

ConferenceStructure::ConferenceStructure(std::vector<NodeSet> hyperedges)
    : hyperedges_(std::move(hyperedges)) {
  for (std::size_t i = 0; i < hyperedges_.size(); ++i)
    if (hyperedges_[i].size() < 2)
      throw Error("invalid_conference", "hyperedge " + std::to_string(i) +
                                            " has fewer than two members");
  std::sort(hyperedges_.begin(), hyperedges_.end());
  hyperedges_.erase(std::unique(hyperedges_.begin(), hyperedges_.end()), hyperedges_.end());
}

bool ConferenceStructure::contains(NodeSet hyperedge) const {
  return std::binary_search(hyperedges_.begin(), hyperedges_.end(), hyperedge);
}

NodeSet ConferenceStructure::support() const {
  NodeSet all;
  for (NodeSet h : hyperedges_) all = all | h;
  return all;
}

ConferenceStructure ConferenceStructure::with(NodeSet hyperedge) const {
  std::vector<NodeSet> next = hyperedges_;
  next.push_back(hyperedge);
  return ConferenceStructure(std::move(next));
}

ConferenceStructure dyadic_conferences(const Graph& g) {
  std::vector<NodeSet> dyads;
  dyads.reserve(g.edge_count());
  for (auto [a, b] : g.edges()) dyads.push_back(NodeSet{a, b});
  return ConferenceStructure(std::move(dyads));
}

ConferenceStructure restrict_conferences(const ConferenceStructure& h, NodeSet x) {
  std::vector<NodeSet> kept;
  for (NodeSet e : h.hyperedges())
    if (e.is_subset_of(x)) kept.push_back(e);
  return ConferenceStructure(std::move(kept));
}

std::vector<NodeSet> conference_components(NodeSet s, const ConferenceStructure& h) {
  std::vector<NodeSet> blocks;
  for (NodeId v : s) blocks.push_back(NodeSet{v});
  for (NodeSet e : h.hyperedges()) {
    if (!e.is_subset_of(s)) continue;
    NodeSet merged = e;
    std::vector<NodeSet> rest;
    for (NodeSet b : blocks) {
      if (b.intersects(e))
        merged = merged | b;
      else
        rest.push_back(b);
    }
    rest.push_back(merged);
    blocks = std::move(rest);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](NodeSet a, NodeSet b) { return a.front() < b.front(); });
  return blocks;
}

DeltaPoly distance_worth(const Graph& g, NodeSet s) {
  DeltaPoly worth;
  for (auto [t, count] : distance_histogram(g, s))
    worth += DeltaPoly::monomial(static_cast<unsigned>(t), Rational(2 * count));
  return worth;
}

DeltaPoly restricted_worth(const Graph& g, const ConferenceStructure& h, NodeSet c) {
  require_members(g, c, "coalition");
  DeltaPoly worth;
  for (NodeSet block : conference_components(c, h))
    if (block.size() >= 2) worth += distance_worth(g, block);
  return worth;
}

}  // namespace netcheap
