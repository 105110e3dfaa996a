#include "netcheap/scenarios.hpp"

#include <string>

#include "netcheap/myerson.hpp"
#include "netcheap/trees.hpp"

namespace netcheap {

StarScenario make_star(int k) {
  if (k < 1) throw Error("out_of_range", "a star needs k >= 1 leaves, got " + std::to_string(k));
  if (k + 1 > kMaxNodes) throw Error("out_of_range", "star too large");
  StarScenario s;
  std::vector<Edge> edges;
  for (NodeId leaf = 1; leaf <= k; ++leaf) {
    edges.emplace_back(0, leaf);
    s.leaves.push_back(leaf);
  }
  s.graph = build_graph(k + 1, edges);
  s.conferences = dyadic_conferences(s.graph);
  return s;
}

std::string_view to_string(LinkMode mode) {
  switch (mode) {
    case LinkMode::hub_hub:
      return "hub-hub";
    case LinkMode::hub_leaf:
      return "hub-leaf";
    case LinkMode::leaf_leaf:
      return "leaf-leaf";
  }
  return "?";
}

LinkMode parse_link_mode(std::string_view text) {
  if (text == "hub-hub") return LinkMode::hub_hub;
  if (text == "hub-leaf") return LinkMode::hub_leaf;
  if (text == "leaf-leaf") return LinkMode::leaf_leaf;
  throw Error("invalid_link_mode", "unknown link mode '" + std::string(text) +
                                       "' (expected hub-hub, hub-leaf or leaf-leaf)");
}

TwoStarScenario make_two_star(const TwoStarSpec& spec) {
  if (spec.k < 1 || spec.l < 1)
    throw Error("out_of_range", "two-star join needs k, l >= 1");
  if (spec.k + spec.l + 2 > kMaxNodes) throw Error("out_of_range", "two-star join too large");
  TwoStarScenario s;
  s.hub_k = 0;
  s.hub_l = spec.k + 1;
  std::vector<Edge> edges;
  for (int i = 1; i <= spec.k; ++i) {
    s.leaves_k.push_back(i);
    edges.emplace_back(s.hub_k, i);
  }
  for (int j = 1; j <= spec.l; ++j) {
    s.leaves_l.push_back(s.hub_l + j);
    edges.emplace_back(s.hub_l, s.hub_l + j);
  }
  switch (spec.link) {
    case LinkMode::hub_hub:
      s.cross_k = s.hub_k;
      s.cross_l = s.hub_l;
      break;
    case LinkMode::hub_leaf:
      s.cross_k = s.hub_k;
      s.cross_l = s.leaves_l.front();
      break;
    case LinkMode::leaf_leaf:
      s.cross_k = s.leaves_k.front();
      s.cross_l = s.leaves_l.front();
      break;
  }
  edges.emplace_back(s.cross_k, s.cross_l);
  s.graph = build_graph(spec.k + spec.l + 2, edges);
  // intra dyads plus the cross pair: exactly the dyads of G+e
  s.conferences = dyadic_conferences(s.graph);
  return s;
}

namespace {

DeltaPoly whole_conference_beff(const Graph& g, const ConferenceStructure& h, NodeId sender,
                                NodeId receiver) {
  ConversationSpec conv{g.nodes(), sender, receiver};
  return effective_bias(g, h, g.nodes(), conv);
}

}  // namespace

DeltaPoly star_beff_sender_hub(int k) {
  StarScenario s = make_star(k);
  return whole_conference_beff(s.graph, s.conferences, s.hub, s.leaves.front());
}

DeltaPoly star_beff_receiver_hub(int k) {
  StarScenario s = make_star(k);
  return whole_conference_beff(s.graph, s.conferences, s.leaves.front(), s.hub);
}

DeltaPoly star_beff_witness_hub(int k) {
  if (k < 2) throw Error("out_of_range", "witness-hub case needs k >= 2");
  StarScenario s = make_star(k);
  return whole_conference_beff(s.graph, s.conferences, s.leaves[0], s.leaves[1]);
}

DeltaPoly two_star_beff(const TwoStarSpec& spec) {
  TwoStarScenario s = make_two_star(spec);
  return whole_conference_beff(s.graph, s.conferences, s.sender(), s.receiver());
}

DeltaPoly hub_leaf_difference(int k, int l) {
  return two_star_beff({k, l, LinkMode::hub_hub}) - two_star_beff({k, l, LinkMode::leaf_leaf});
}

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::hub_to_hub:
      return "hub-to-hub";
    case Protocol::bigstar_hub_to_leaf:
      return "bigstar-hub-to-leaf";
    case Protocol::hub_to_leaf:
      return "hub-to-leaf";
    case Protocol::leaf_to_leaf:
      return "leaf-to-leaf";
  }
  return "?";
}

DeltaPoly protocol_bias(int k, int l, Protocol protocol) {
  if (protocol == Protocol::bigstar_hub_to_leaf) {
    StarScenario s = make_star(k + l + 1);
    return bias_component(s.graph, s.conferences, s.graph.nodes(), s.leaves.front(), s.hub);
  }
  TwoStarScenario s = make_two_star({k, l, LinkMode::hub_hub});
  NodeId sender = s.hub_k;
  NodeId receiver = s.hub_l;
  if (protocol == Protocol::hub_to_leaf) {
    receiver = s.leaves_k.front();
  } else if (protocol == Protocol::leaf_to_leaf) {
    sender = s.leaves_k.front();
    receiver = s.leaves_l.front();
  }
  return bias_component(s.graph, s.conferences, s.graph.nodes(), receiver, sender);
}

ExHubBiases exhub_biases(int k, int l) {
  ExHubBiases out;
  {
    TwoStarScenario s = make_two_star({k, l, LinkMode::leaf_leaf});
    BiasCalculator calc(s.graph, s.conferences, s.graph.nodes());
    out.exhub_over_receiver = calc.component(s.receiver(), s.hub_k);
    out.sender_over_exhub = calc.component(s.hub_k, s.sender());
  }
  {
    TwoStarScenario s = make_two_star({k, l, LinkMode::hub_hub});
    BiasCalculator calc(s.graph, s.conferences, s.graph.nodes());
    const NodeId ex_leaf = s.leaves_k.front();
    out.exleaf_over_receiver = calc.component(s.receiver(), ex_leaf);
    out.sender_over_exleaf = calc.component(ex_leaf, s.sender());
  }
  return out;
}

StarDominanceReport check_star_dominance(int n, std::span<const Rational> grid) {
  if (n < 3 || n > kMaxTreeNodes)
    throw Error("out_of_range", "star dominance check needs 3 <= n <= 8, got " + std::to_string(n));
  StarDominanceReport report;
  report.n = n;
  const StarScenario star = make_star(n - 1);
  const DeltaPoly star_worth = distance_worth(star.graph, star.graph.nodes());
  std::vector<Rational> star_values;
  for (const Rational& d : grid) star_values.push_back(star_worth(d));

  for_each_labeled_tree(n, [&](const Graph& tree) {
    ++report.trees;
    const DistanceHistogram hist = distance_histogram(tree, tree.nodes());
    const bool small_diameter = hist.empty() || hist.rbegin()->first <= 2;
    DeltaPoly worth;
    for (auto [t, count] : hist)
      worth += DeltaPoly::monomial(static_cast<unsigned>(t), Rational(2 * count));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      ++report.comparisons;
      const Rational gap = worth(grid[i]) - star_values[i];
      if (gap > 0) {
        ++report.violations;
        if (gap > report.max_violation) report.max_violation = gap;
      } else if (gap == 0 && !small_diameter) {
        ++report.bad_ties;
      } else if (gap != 0 && small_diameter) {
        ++report.missing_ties;
      }
    }
  });
  return report;
}

FastPathReport check_tree_fast_path(int n) {
  FastPathReport report;
  report.n = n;
  for_each_labeled_tree(n, [&](const Graph& tree) {
    ++report.trees;
    const Allocation fast = tree_path_sharing(tree);
    const Allocation slow = myerson_conference(tree, dyadic_conferences(tree), tree.nodes());
    if (!(fast == slow)) ++report.mismatches;
  });
  return report;
}

std::vector<Rational> decile_grid() {
  return rational_grid(make_rational(1, 10), make_rational(9, 10), make_rational(1, 10));
}

std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, const Rational& step) {
  if (step <= 0) throw Error("invalid_grid", "grid step must be positive");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

}  // namespace netcheap
