#include "netcheap/myerson.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <type_traits>
#include <vector>

namespace netcheap {

const DeltaPoly& Allocation::at(NodeId player) const {
  auto it = payoffs.find(player);
  if (it == payoffs.end())
    throw Error("not_a_player", "node " + std::to_string(player) + " is not in the allocation");
  return it->second;
}

NodeSet Allocation::players() const {
  NodeSet s;
  for (const auto& [id, _] : payoffs) s.insert(id);
  return s;
}

DeltaPoly Allocation::total(NodeSet block) const {
  DeltaPoly sum;
  for (NodeId v : block)
    if (auto it = payoffs.find(v); it != payoffs.end()) sum += it->second;
  return sum;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Worth table rescaled to integer coefficients: dense row of `width`
// entries per coalition, common denominator `scale`.
struct IntegerTable {
  std::vector<mpz_class> cells;
  std::size_t width = 0;
  mpz_class scale = 1;
};

IntegerTable to_integer_table(const std::vector<DeltaPoly>& table) {
  IntegerTable out;
  unsigned max_power = 0;
  for (const DeltaPoly& p : table) {
    if (p.is_zero()) continue;
    max_power = std::max(max_power, static_cast<unsigned>(p.degree()));
    for (const auto& [_, c] : p.coefficients()) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), c.get_den_mpz_t());
  }
  out.width = max_power + 1;
  out.cells.assign(table.size() * out.width, 0);
  for (std::size_t m = 0; m < table.size(); ++m)
    for (const auto& [power, c] : table[m].coefficients())
      out.cells[m * out.width + power] = c.get_num() * (out.scale / c.get_den());
  return out;
}

// sums[s * width + t] accumulates (v(S+i) - v(S))_t over |S| = s.
template <typename Acc>
std::vector<Acc> marginal_sums(const IntegerTable& t, const std::vector<Acc>& cells, int p, int i) {
  const std::size_t w = t.width;
  std::vector<Acc> sums(static_cast<std::size_t>(p) * w, Acc(0));
  const std::uint64_t bit = std::uint64_t{1} << i;
  const std::uint64_t count = std::uint64_t{1} << p;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (mask & bit) continue;
    const std::size_t s = static_cast<std::size_t>(std::popcount(mask));
    const Acc* with = &cells[(mask | bit) * w];
    const Acc* without = &cells[mask * w];
    Acc* row = &sums[s * w];
    for (std::size_t k = 0; k < w; ++k) {
      row[k] += with[k];
      row[k] -= without[k];
    }
  }
  return sums;
}

template <typename Acc>
Rational to_rational(const Acc& a) {
  if constexpr (std::is_same_v<Acc, mpz_class>) {
    return Rational(a);
  } else {
    return Rational(static_cast<long>(a));
  }
}

}  // namespace

Allocation shapley(NodeSet players, const WorthFunction& worth, const ShapleyOptions& options) {
  const int p = players.size();
  const int guard = std::min(options.max_players, kMaxPlayerGuard);
  if (p > guard)
    throw Error("guard_exceeded",
                std::to_string(p) + " players exceed the exact-enumeration guard of " +
                    std::to_string(guard) +
                    "; use tree_path_sharing for trees or a smaller instance");
  if (!worth(NodeSet{}).is_zero())
    throw Error("invalid_worth", "worth of the empty coalition must be zero");

  const std::vector<NodeId> ids = players.to_vector();
  const std::size_t count = std::size_t{1} << p;
  std::vector<NodeSet> members(count);
  std::vector<DeltaPoly> table(count);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    members[mask] = members[mask & (mask - 1)].with(ids[static_cast<std::size_t>(low)]);
    table[mask] = worth(members[mask]);
  }

  const IntegerTable itable = to_integer_table(table);
  const std::size_t w = itable.width;

  // s!(p-s-1)!/p!, with the table's common denominator folded in.
  std::vector<Rational> weights(static_cast<std::size_t>(p));
  const mpz_class p_fact = factorial(p);
  for (int s = 0; s < p; ++s) {
    Rational q(factorial(s) * factorial(p - s - 1), p_fact * itable.scale);
    q.canonicalize();
    weights[static_cast<std::size_t>(s)] = q;
  }

  // int64 accumulation is exact while |cell| * 2^p stays below 2^62.
  bool small = p <= 20;
  for (const mpz_class& c : itable.cells)
    if (!small || abs(c) >= mpz_class(1) << 40) {
      small = false;
      break;
    }
  std::vector<long> small_cells;
  if (small) {
    small_cells.reserve(itable.cells.size());
    for (const mpz_class& c : itable.cells) small_cells.push_back(c.get_si());
  }

  Allocation out;
  for (int i = 0; i < p; ++i) {
    DeltaPoly::Coefficients coeffs;
    auto fold = [&](const auto& sums) {
      for (std::size_t k = 0; k < w; ++k) {
        Rational acc = 0;
        for (int s = 0; s < p; ++s)
          acc += weights[static_cast<std::size_t>(s)] *
                 to_rational(sums[static_cast<std::size_t>(s) * w + k]);
        if (acc != 0) coeffs.emplace(static_cast<unsigned>(k), acc);
      }
    };
    if (small)
      fold(marginal_sums<long>(itable, small_cells, p, i));
    else
      fold(marginal_sums<mpz_class>(itable, itable.cells, p, i));
    out.payoffs.emplace(ids[static_cast<std::size_t>(i)], DeltaPoly(std::move(coeffs)));
  }
  return out;
}

Allocation myerson_conference(const Graph& g, const ConferenceStructure& h, NodeSet players,
                              const ShapleyOptions& options) {
  require_members(g, players, "player set");
  require_members(g, h.support(), "conference structure");
  const ConferenceStructure local = restrict_conferences(h, players);
  return shapley(
      players, [&](NodeSet c) { return restricted_worth(g, local, c); }, options);
}

Allocation tree_path_sharing(const Graph& tree) {
  if (!is_tree(tree)) throw Error("not_a_tree", "tree_path_sharing requires a tree");
  const int n = tree.node_count();
  std::vector<DeltaPoly> pay(static_cast<std::size_t>(n));
  std::vector<NodeId> parent(static_cast<std::size_t>(n));
  std::vector<int> depth(static_cast<std::size_t>(n));
  for (NodeId source = 0; source < n; ++source) {
    // BFS tree rooted at source
    std::vector<NodeId> queue{source};
    parent[source] = -1;
    depth[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId u = queue[head];
      for (NodeId v : tree.neighbors(u)) {
        if (v == parent[u]) continue;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
    for (NodeId target = source + 1; target < n; ++target) {
      const int t = depth[target];
      // both orientations of the pair
      const DeltaPoly share =
          DeltaPoly::monomial(static_cast<unsigned>(t), make_rational(2, t + 1));
      for (NodeId x = target; x != -1; x = parent[x]) pay[x] += share;
    }
  }
  Allocation out;
  for (NodeId v = 0; v < n; ++v) out.payoffs.emplace(v, std::move(pay[v]));
  return out;
}

}  // namespace netcheap
