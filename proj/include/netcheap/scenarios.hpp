#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netcheap/bias.hpp"
#include "netcheap/conference.hpp"
#include "netcheap/graph.hpp"

namespace netcheap {

// Hub is node 0, leaves are 1..k; conferences are the dyads.
struct StarScenario {
  Graph graph;
  ConferenceStructure conferences;
  NodeId hub = 0;
  std::vector<NodeId> leaves;
};

StarScenario make_star(int k);

enum class LinkMode { hub_hub, hub_leaf, leaf_leaf };

std::string_view to_string(LinkMode mode);
LinkMode parse_link_mode(std::string_view text);

struct TwoStarSpec {
  int k = 1;
  int l = 1;
  LinkMode link = LinkMode::hub_hub;
};

// Layout: hub_k = 0, leaves_k = 1..k, hub_l = k+1, leaves_l = k+2..k+l+1.
// The cross edge joins cross_k (side k) to cross_l (side l); by default the
// sender sits at cross_k and the receiver at cross_l. Conferences are the
// intra-star dyads plus the single cross pair.
struct TwoStarScenario {
  Graph graph;
  ConferenceStructure conferences;
  NodeId hub_k = 0;
  NodeId hub_l = 0;
  std::vector<NodeId> leaves_k;
  std::vector<NodeId> leaves_l;
  NodeId cross_k = 0;
  NodeId cross_l = 0;

  NodeId sender() const { return cross_k; }
  NodeId receiver() const { return cross_l; }
};

TwoStarScenario make_two_star(const TwoStarSpec& spec);

// ---- brute-force quantities (graph -> Myerson -> bias) ----

// Effective bias of the whole-star conference, hub speaking to a leaf.
DeltaPoly star_beff_sender_hub(int k);
// Same conference with the receiver at the hub.
DeltaPoly star_beff_receiver_hub(int k);
// Whole-star conference, two leaves talking, hub among the witnesses.
DeltaPoly star_beff_witness_hub(int k);

// Effective bias of the whole-network conference on a two-star join with
// default roles.
DeltaPoly two_star_beff(const TwoStarSpec& spec);

// Difference of whole-conference effective biases:
// hub-hub join (hub to hub) minus leaf-leaf join (linked leaf to linked leaf).
DeltaPoly hub_leaf_difference(int k, int l);

// Two-member conversations on the hub-hub join (and on the big star S_m,
// m = k + l + 1). Only the sender-receiver component enters.
enum class Protocol { hub_to_hub, bigstar_hub_to_leaf, hub_to_leaf, leaf_to_leaf };
std::string_view to_string(Protocol p);
DeltaPoly protocol_bias(int k, int l, Protocol protocol);

// Ex-hub vs ex-leaf witness components on the whole-network conference.
struct ExHubBiases {
  DeltaPoly exhub_over_receiver;    // leaf-leaf join: hub_k's loss when R leaves
  DeltaPoly sender_over_exhub;      // leaf-leaf join: S's loss when hub_k leaves
  DeltaPoly exleaf_over_receiver;   // hub-hub join: a leaf of S_k, loss when R leaves
  DeltaPoly sender_over_exleaf;     // hub-hub join: S's loss when that leaf leaves
};
ExHubBiases exhub_biases(int k, int l);

// ---- dominance and threshold checks ----

struct StarDominanceReport {
  int n = 0;
  std::uint64_t trees = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t violations = 0;         // v(T) > v(star)
  std::uint64_t bad_ties = 0;           // v(T) == v(star) but diameter > 2
  std::uint64_t missing_ties = 0;       // diameter <= 2 but v(T) != v(star)
  Rational max_violation = 0;

  bool pass() const { return violations == 0 && bad_ties == 0 && missing_ties == 0; }
};

// Enumerates all labeled trees on n nodes (3 <= n <= 8) and compares
// their total worth against the star's at each grid point.
StarDominanceReport check_star_dominance(int n, std::span<const Rational> grid);

struct FastPathReport {
  int n = 0;
  std::uint64_t trees = 0;
  std::uint64_t mismatches = 0;

  bool pass() const { return mismatches == 0; }
};

// Compares tree_path_sharing with the enumeration-based Myerson value on
// every labeled tree with n nodes.
FastPathReport check_tree_fast_path(int n);

// 0.1, 0.2, ..., 0.9
std::vector<Rational> decile_grid();
// lo, lo + step, ..., hi (inclusive, exact).
std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, const Rational& step);

}  // namespace netcheap
