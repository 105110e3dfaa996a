#pragma once

#include <functional>
#include <map>

#include "netcheap/conference.hpp"
#include "netcheap/delta_poly.hpp"
#include "netcheap/graph.hpp"

namespace netcheap {

// Payoff polynomial per player.
struct Allocation {
  std::map<NodeId, DeltaPoly> payoffs;

  const DeltaPoly& at(NodeId player) const;
  NodeSet players() const;
  // Sum of payoffs over `block` (players outside the allocation count as 0).
  DeltaPoly total(NodeSet block) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

using WorthFunction = std::function<DeltaPoly(NodeSet)>;

inline constexpr int kDefaultPlayerGuard = 14;
// Hard ceiling on the guard: the worth table has 2^n entries.
inline constexpr int kMaxPlayerGuard = 22;

struct ShapleyOptions {
  int max_players = kDefaultPlayerGuard;
};

// Exact Shapley value by subset enumeration. Every coalition worth is
// computed once into a 2^n table; weights are s!(n-s-1)!/n!.
Allocation shapley(NodeSet players, const WorthFunction& worth,
                   const ShapleyOptions& options = {});

// Shapley value of the conference-restricted game on `players`.
Allocation myerson_conference(const Graph& g, const ConferenceStructure& h, NodeSet players,
                              const ShapleyOptions& options = {});

// Closed-form Myerson value of a tree under dyadic conferences: every
// ordered pair at distance t credits d^t/(t+1) to each node of its path.
Allocation tree_path_sharing(const Graph& tree);

}  // namespace netcheap
