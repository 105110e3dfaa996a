#pragma once

#include <optional>
#include <span>
#include <vector>

#include "netcheap/bias.hpp"
#include "netcheap/delta_poly.hpp"

namespace netcheap {

// Crawford-Sobel threshold 1/(2n(n+1)), n >= 1.
Rational beta(int n);

// The unique N >= 1 with beta(N) <= b < beta(N-1), beta(0) = +inf.
// Throws "out_of_model" for b <= 0.
int partition_count(const Rational& b);

// t_0 = 0, t_k = k t_1 + 2 b k (k-1), t_1 = 1/n - 2 b (n-1), t_n = 1.
// std::nullopt when t_1 <= 0 (no equilibrium with n intervals).
std::optional<std::vector<Rational>> partition_boundaries(const Rational& b, int n);

// Receiver best responses: interval midpoints.
std::vector<Rational> receiver_actions(std::span<const Rational> boundaries);

// Ideal-point shifts in the sender's composite quadratic cost: one for the
// receiver term and one per witness (sender-witness plus witness-receiver).
struct CostOffsets {
  Rational sender_receiver;
  std::vector<Rational> witness_offsets;

  Rational aggregate() const;
};

CostOffsets evaluate_offsets(const BiasBreakdown& breakdown, const Rational& delta);

struct VerificationReport {
  // |cost(a_k, t_k) - cost(a_{k+1}, t_k)| at each interior boundary,
  // with the full unaggregated cost sum.
  std::vector<Rational> sender_residuals;
  // |a_k - (t_{k-1} + t_k) / 2| per interval.
  std::vector<Rational> receiver_residuals;
  Rational max_residual = 0;

  bool within(const Rational& tol) const { return max_residual < tol; }
};

VerificationReport verify_equilibrium(const CostOffsets& offsets,
                                      std::span<const Rational> boundaries);

struct PartitionEquilibrium {
  int n_partitions = 0;
  std::vector<Rational> boundaries;
  std::vector<Rational> actions;
  Rational b_eff_value;
  VerificationReport verification;
};

// Partition equilibrium for a fixed set of cost offsets; `forced_size`
// overrides the threshold rule (std::nullopt when that size is infeasible).
std::optional<PartitionEquilibrium> equilibrium_for(const CostOffsets& offsets,
                                                    std::optional<int> forced_size = {});

struct ConversationResult {
  BiasBreakdown bias;
  Rational delta;
  PartitionEquilibrium equilibrium;
};

// effective bias -> value at delta -> partition count -> boundaries ->
// verification against the composite witness costs.
ConversationResult solve_conversation(const Graph& g, const ConferenceStructure& h,
                                      NodeSet players, const ConversationSpec& conv,
                                      const DeltaValue& delta,
                                      const ShapleyOptions& options = {});

}  // namespace netcheap
