#include "netcheap/graph.hpp"

#include <algorithm>
#include <string>

namespace netcheap {

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count()) return false;
  return neighbors(a).contains(b);
}

Graph build_graph(int node_count, std::span<const Edge> edges) {
  if (node_count < 0 || node_count > kMaxNodes)
    throw Error("out_of_range", "node_count " + std::to_string(node_count) +
                                    " outside [0, " + std::to_string(kMaxNodes) + "]");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(node_count), 0);
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    auto [a, b] = edges[idx];
    if (a < 0 || b < 0 || a >= node_count || b >= node_count)
      throw Error("out_of_range", "edge " + std::to_string(idx) + " (" +
                                      std::to_string(a) + "," + std::to_string(b) +
                                      ") has an endpoint outside [0, " +
                                      std::to_string(node_count) + ")");
    if (a == b)
      throw Error("self_loop", "edge " + std::to_string(idx) + " is a self-loop at node " +
                                   std::to_string(a));
    g.adjacency_[a] |= std::uint64_t{1} << b;
    g.adjacency_[b] |= std::uint64_t{1} << a;
  }
  for (NodeId a = 0; a < node_count; ++a)
    for (NodeId b : NodeSet(g.adjacency_[a]))
      if (a < b) g.edges_.emplace_back(a, b);
  return g;
}

void require_members(const Graph& g, NodeSet s, const char* what) {
  if (!s.is_subset_of(g.nodes()))
    throw Error("out_of_range", std::string(what) + " names nodes outside [0, " +
                                    std::to_string(g.node_count()) + ")");
}

Graph induced_subgraph(const Graph& g, NodeSet s) {
  require_members(g, s, "induced_subgraph set");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (s.contains(e.first) && s.contains(e.second)) kept.push_back(e);
  return build_graph(g.node_count(), kept);
}

std::vector<int> bfs_distances(const Graph& g, NodeSet s, NodeId source) {
  require_members(g, s, "bfs set");
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
  if (!s.contains(source)) return dist;
  NodeSet visited{source};
  NodeSet frontier{source};
  int level = 0;
  while (!frontier.empty()) {
    NodeSet next;
    for (NodeId v : frontier) {
      dist[v] = level;
      next = next | g.neighbors(v);
    }
    frontier = (next & s) - visited;
    visited = visited | frontier;
    ++level;
  }
  return dist;
}

DistanceHistogram distance_histogram(const Graph& g, NodeSet s) {
  require_members(g, s, "distance_histogram set");
  DistanceHistogram hist;
  for (NodeId source : s) {
    NodeSet visited{source};
    NodeSet frontier{source};
    int level = 0;
    while (true) {
      NodeSet next;
      for (NodeId v : frontier) next = next | g.neighbors(v);
      frontier = (next & s) - visited;
      if (frontier.empty()) break;
      visited = visited | frontier;
      ++level;
      // count each unordered pair from its smaller endpoint
      std::uint64_t later = frontier.bits() & ~((std::uint64_t{2} << source) - 1);
      if (later != 0) hist[level] += static_cast<std::uint64_t>(std::popcount(later));
    }
  }
  return hist;
}

std::vector<NodeSet> connected_components(const Graph& g, NodeSet s) {
  require_members(g, s, "connected_components set");
  std::vector<NodeSet> out;
  NodeSet left = s;
  while (!left.empty()) {
    NodeSet comp{left.front()};
    NodeSet frontier = comp;
    while (!frontier.empty()) {
      NodeSet next;
      for (NodeId v : frontier) next = next | g.neighbors(v);
      frontier = (next & s) - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

bool is_tree(const Graph& g) {
  if (g.node_count() == 0) return false;
  if (g.edge_count() != static_cast<std::size_t>(g.node_count() - 1)) return false;
  return connected_components(g, g.nodes()).size() == 1;
}

}  // namespace netcheap
