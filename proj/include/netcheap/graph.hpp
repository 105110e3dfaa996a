#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "netcheap/node_set.hpp"

namespace netcheap {

using Edge = std::pair<NodeId, NodeId>;

// Undirected simple graph on ids [0, node_count). Edges are stored once,
// as (lo, hi) pairs in sorted order; adjacency is kept as bitmasks.
class Graph {
 public:
  Graph() = default;

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  NodeSet nodes() const { return NodeSet::first(node_count()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  NodeSet neighbors(NodeId v) const { return NodeSet(adjacency_.at(v)); }
  bool has_edge(NodeId a, NodeId b) const;
  int degree(NodeId v) const { return neighbors(v).size(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(int, std::span<const Edge>);

  std::vector<std::uint64_t> adjacency_;
  std::vector<Edge> edges_;
};

// Rejects out-of-range endpoints and self-loops; duplicate edges
// (in either orientation) are merged.
Graph build_graph(int node_count, std::span<const Edge> edges);
inline Graph build_graph(int node_count, std::initializer_list<Edge> edges) {
  return build_graph(node_count, std::span<const Edge>(edges.begin(), edges.size()));
}

// Same id space as `g`; keeps exactly the edges with both ends in `s`.
Graph induced_subgraph(const Graph& g, NodeSet s);

// Throws unless `s` only names nodes of `g`.
void require_members(const Graph& g, NodeSet s, const char* what);

// Unordered-pair counts by shortest-path distance inside G[s].
// Disconnected pairs are omitted.
using DistanceHistogram = std::map<int, std::uint64_t>;
DistanceHistogram distance_histogram(const Graph& g, NodeSet s);

// BFS distances from `source` inside G[s]; -1 marks unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, NodeSet s, NodeId source);

// Connected components of G[s], ordered by smallest member.
std::vector<NodeSet> connected_components(const Graph& g, NodeSet s);

bool is_tree(const Graph& g);

}  // namespace netcheap
