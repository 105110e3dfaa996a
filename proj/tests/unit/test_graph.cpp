#include <doctest.h>

#include <random>
#include <set>

#include "netcheap/graph.hpp"
#include "netcheap/trees.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace netcheap;

namespace {

Graph from_oracle(const oracle::Net& net) {
  std::vector<Edge> edges(net.edges.begin(), net.edges.end());
  return build_graph(net.n, edges);
}

}  // namespace

TEST_CASE("node sets") {
  NodeSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(s.to_vector() == std::vector<NodeId>{0, 3, 5});
  CHECK(s.without(3) == NodeSet{0, 5});
  CHECK(NodeSet::first(3) == NodeSet{0, 1, 2});
  CHECK(NodeSet{1, 2}.is_subset_of(NodeSet{0, 1, 2}));
  CHECK_ERROR_CODE(NodeSet{64}, "out_of_range");
  CHECK_ERROR_CODE(NodeSet{-1}, "out_of_range");
}

TEST_CASE("build_graph validates and canonicalizes") {
  Graph g = build_graph(4, {{1, 0}, {0, 1}, {2, 3}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK_ERROR_CODE(build_graph(3, {{0, 3}}), "out_of_range");
  CHECK_ERROR_CODE(build_graph(3, {{1, 1}}), "self_loop");
  CHECK_ERROR_CODE(build_graph(65, {}), "out_of_range");
}

TEST_CASE("distance histogram of a path") {
  Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  DistanceHistogram h = distance_histogram(p4, p4.nodes());
  CHECK(h == DistanceHistogram{{1, 3}, {2, 2}, {3, 1}});
  // induced on {0, 2, 3}: 0 is isolated
  CHECK(distance_histogram(p4, NodeSet{0, 2, 3}) == DistanceHistogram{{1, 1}});
  CHECK(connected_components(p4, NodeSet{0, 2, 3}) == std::vector<NodeSet>{NodeSet{0}, NodeSet{2, 3}});
  CHECK(bfs_distances(p4, p4.nodes(), 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(is_tree(p4));
  CHECK_FALSE(is_tree(build_graph(4, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST_CASE("property: histogram matches pairwise BFS oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 9;
    oracle::Net net = oracle::random_connected(rng, n, 0.25);
    Graph g = from_oracle(net);
    std::vector<int> coalition;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 != 0) coalition.push_back(v);
    const auto adj = oracle::adjacency(net);
    DistanceHistogram expected;
    for (std::size_t i = 0; i < coalition.size(); ++i)
      for (std::size_t j = i + 1; j < coalition.size(); ++j) {
        int t = oracle::distance(adj, coalition, coalition[i], coalition[j]);
        if (t > 0) ++expected[t];
      }
    CHECK(distance_histogram(g, NodeSet::from_ids(coalition)) == expected);
  }
}

TEST_CASE("labeled tree enumeration") {
  for (int n = 2; n <= 6; ++n) {
    std::uint64_t count = 0;
    std::set<std::vector<Edge>> seen;
    for_each_labeled_tree(n, [&](const Graph& t) {
      ++count;
      CHECK(is_tree(t));
      seen.insert(t.edges());
    });
    CHECK(count == labeled_tree_count(n));
    CHECK(seen.size() == count);  // Cayley: all distinct
  }
  CHECK(labeled_tree_count(7) == 16807);
  CHECK(labeled_tree_count(8) == 262144);
  std::vector<int> seq{3, 3, 3};
  Graph star = tree_from_pruefer(5, seq);
  CHECK(star.degree(3) == 4);
  CHECK_ERROR_CODE(enumerate_labeled_trees(9), "out_of_range");
  CHECK_ERROR_CODE(enumerate_labeled_trees(1), "out_of_range");
}
