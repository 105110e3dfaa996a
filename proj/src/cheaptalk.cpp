#include "netcheap/cheaptalk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace netcheap {

Rational beta(int n) {
  if (n < 1) throw Error("out_of_range", "beta(n) needs n >= 1, got " + std::to_string(n));
  return make_rational(1, 2L * n * (n + 1));
}

int partition_count(const Rational& b) {
  if (b <= 0)
    throw Error("out_of_model",
                "effective bias " + to_string(b) +
                    " is not positive; the partition-threshold rule is undefined "
                    "(unbounded precision, out of model)");
  // largest N with 2N(N-1) < 1/b; start from the real root estimate
  const Rational inv = 1 / b;
  const double guess = 0.5 + std::sqrt(0.25 + inv.get_d() / 2.0);
  long n = std::max(1L, static_cast<long>(guess) - 2);
  auto fits = [&](long k) { return Rational(2 * mpz_class(k) * (k - 1)) < inv; };
  while (n > 1 && !fits(n)) --n;
  while (fits(n + 1)) ++n;
  if (n > std::numeric_limits<int>::max())
    throw Error("out_of_model", "partition count overflows for bias " + to_string(b));
  return static_cast<int>(n);
}

std::optional<std::vector<Rational>> partition_boundaries(const Rational& b, int n) {
  if (n < 1) throw Error("out_of_range", "partition size must be >= 1");
  if (b < 0) throw Error("out_of_model", "bias must be nonnegative");
  const Rational t1 = Rational(make_rational(1, n) - 2 * b * (n - 1));
  if (t1 <= 0) return std::nullopt;
  std::vector<Rational> t(static_cast<std::size_t>(n) + 1);
  t[0] = 0;
  for (int k = 1; k <= n; ++k) t[static_cast<std::size_t>(k)] = k * t1 + 2 * b * k * (k - 1);
  return t;
}

std::vector<Rational> receiver_actions(std::span<const Rational> boundaries) {
  std::vector<Rational> a;
  for (std::size_t k = 1; k < boundaries.size(); ++k)
    a.push_back((boundaries[k - 1] + boundaries[k]) / 2);
  return a;
}

Rational CostOffsets::aggregate() const {
  Rational sum = sender_receiver;
  for (const Rational& w : witness_offsets) sum += w;
  return sum / static_cast<long>(witness_offsets.size() + 1);
}

CostOffsets evaluate_offsets(const BiasBreakdown& breakdown, const Rational& delta) {
  CostOffsets out;
  out.sender_receiver = breakdown.sender_receiver(delta);
  for (const WitnessComponents& w : breakdown.witnesses)
    out.witness_offsets.push_back(w.sender_loss(delta) + w.witness_loss(delta));
  return out;
}

namespace {

// Sender's cost magnitude (a - (theta + c_0))^2 + sum_w (a - (theta + c_w))^2.
Rational sender_cost(const CostOffsets& o, const Rational& action, const Rational& theta) {
  Rational d = action - theta - o.sender_receiver;
  Rational cost = d * d;
  for (const Rational& c : o.witness_offsets) {
    d = action - theta - c;
    cost += d * d;
  }
  return cost;
}

}  // namespace

VerificationReport verify_equilibrium(const CostOffsets& offsets,
                                      std::span<const Rational> boundaries) {
  if (boundaries.size() < 2 || boundaries.front() != 0 || boundaries.back() != 1)
    throw Error("invalid_boundaries", "boundaries must run from 0 to 1");
  for (std::size_t k = 1; k < boundaries.size(); ++k)
    if (!(boundaries[k - 1] < boundaries[k]))
      throw Error("invalid_boundaries", "boundaries must be strictly increasing");
  VerificationReport report;
  const std::vector<Rational> actions = receiver_actions(boundaries);
  for (std::size_t k = 0; k < actions.size(); ++k) {
    Rational r = abs(actions[k] - (boundaries[k] + boundaries[k + 1]) / 2);
    if (r > report.max_residual) report.max_residual = r;
    report.receiver_residuals.push_back(std::move(r));
  }
  for (std::size_t k = 1; k + 1 < boundaries.size(); ++k) {
    const Rational& theta = boundaries[k];
    Rational r = abs(sender_cost(offsets, actions[k - 1], theta) -
                     sender_cost(offsets, actions[k], theta));
    if (r > report.max_residual) report.max_residual = r;
    report.sender_residuals.push_back(std::move(r));
  }
  return report;
}

std::optional<PartitionEquilibrium> equilibrium_for(const CostOffsets& offsets,
                                                    std::optional<int> forced_size) {
  PartitionEquilibrium eq;
  eq.b_eff_value = offsets.aggregate();
  eq.n_partitions = forced_size ? *forced_size : partition_count(eq.b_eff_value);
  auto t = partition_boundaries(eq.b_eff_value, eq.n_partitions);
  if (!t) return std::nullopt;
  eq.boundaries = std::move(*t);
  eq.actions = receiver_actions(eq.boundaries);
  eq.verification = verify_equilibrium(offsets, eq.boundaries);
  return eq;
}

ConversationResult solve_conversation(const Graph& g, const ConferenceStructure& h,
                                      NodeSet players, const ConversationSpec& conv,
                                      const DeltaValue& delta, const ShapleyOptions& options) {
  ConversationResult out;
  out.bias = bias_breakdown(g, h, players, conv, options);
  out.delta = delta.value();
  const CostOffsets offsets = evaluate_offsets(out.bias, delta.value());
  auto eq = equilibrium_for(offsets);
  // partition_count guarantees t_1 > 0
  out.equilibrium = std::move(*eq);
  return out;
}

}  // namespace netcheap
