#include <doctest.h>

#include <random>

#include "netcheap/conference.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace netcheap;

namespace {

ConferenceStructure from_lists(const std::vector<std::vector<int>>& lists) {
  std::vector<NodeSet> h;
  for (const auto& e : lists) h.push_back(NodeSet::from_ids(e));
  return ConferenceStructure(h);
}

}  // namespace

TEST_CASE("conference structure invariants") {
  ConferenceStructure h({NodeSet{1, 2}, NodeSet{0, 1}, NodeSet{1, 2}});
  CHECK(h.size() == 2);
  CHECK(h.hyperedges().front() == NodeSet{0, 1});
  CHECK(h.support() == NodeSet{0, 1, 2});
  CHECK(h.contains(NodeSet{1, 2}));
  CHECK_ERROR_CODE(ConferenceStructure({NodeSet{3}}), "invalid_conference");
  CHECK_ERROR_CODE(ConferenceStructure({NodeSet{}}), "invalid_conference");
  CHECK(restrict_conferences(h, NodeSet{1, 2}) == ConferenceStructure({NodeSet{1, 2}}));
}

TEST_CASE("three-node star worths") {
  Graph g = build_graph(3, {{0, 1}, {0, 2}});
  ConferenceStructure h = dyadic_conferences(g);
  const DeltaPoly d = DeltaPoly::monomial(1, q(1));
  const DeltaPoly d2 = DeltaPoly::monomial(2, q(1));
  CHECK(restricted_worth(g, h, g.nodes()) == d * q(4) + d2 * q(2));
  CHECK(restricted_worth(g, h, NodeSet{0, 1}) == d * q(2));
  // two leaves alone cannot coordinate
  CHECK(restricted_worth(g, h, NodeSet{1, 2}).is_zero());
  // a three-member conference is not contained in {1, 2}
  ConferenceStructure all = h.with(NodeSet{0, 1, 2});
  CHECK(conference_components(NodeSet{1, 2}, all).size() == 2);
  // an explicit leaf pair conference: their base-graph induced distance is infinite
  ConferenceStructure leaves = h.with(NodeSet{1, 2});
  CHECK(conference_components(NodeSet{1, 2}, leaves) == std::vector<NodeSet>{NodeSet{1, 2}});
  CHECK(restricted_worth(g, leaves, NodeSet{1, 2}).is_zero());
}

TEST_CASE("hyperedges not contained in the coalition do not connect it") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  ConferenceStructure h({NodeSet{0, 1, 2, 3}});
  CHECK(restricted_worth(g, h, NodeSet{0, 1, 2}).is_zero());
  CHECK(restricted_worth(g, h, g.nodes()) == distance_worth(g, g.nodes()));
}

TEST_CASE("property: restricted worth matches union-find oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + trial % 6;
    oracle::Net net = oracle::random_connected(rng, n, 0.2);
    net.hyperedges = oracle::random_hyperedges(rng, n, 1 + trial % 5, 4);
    std::vector<Edge> edges(net.edges.begin(), net.edges.end());
    Graph g = build_graph(n, edges);
    ConferenceStructure h = from_lists(net.hyperedges);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 1 + rng() % 5) {
      NodeSet c(mask);
      CHECK(restricted_worth(g, h, c) == oracle::restricted_worth(net, c.to_vector()));
    }
  }
}

TEST_CASE("property: worth is superadditive over disjoint blocks") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 5;
    oracle::Net net = oracle::random_connected(rng, n, 0.3);
    std::vector<Edge> edges(net.edges.begin(), net.edges.end());
    Graph g = build_graph(n, edges);
    ConferenceStructure h = dyadic_conferences(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t a = rng() & full;
    const NodeSet s(a), t(full & ~a);
    const DeltaPoly gap = restricted_worth(g, h, s | t) - restricted_worth(g, h, s) -
                          restricted_worth(g, h, t);
    CHECK(gap(q(1, 2)) >= 0);
  }
}
