#include "netcheap/trees.hpp"

#include <string>

namespace netcheap {

namespace {

void check_tree_size(int n) {
  if (n < kMinTreeNodes || n > kMaxTreeNodes)
    throw Error("out_of_range", "labeled tree enumeration needs 2 <= n <= 8, got " +
                                    std::to_string(n));
}

}  // namespace

Graph tree_from_pruefer(int n, std::span<const int> sequence) {
  if (n < 2 || n > kMaxNodes) throw Error("out_of_range", "tree size out of range");
  if (sequence.size() != static_cast<std::size_t>(n - 2))
    throw Error("invalid_pruefer", "Prüfer sequence must have length n-2");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw Error("invalid_pruefer", "Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int x : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      edges.emplace_back(u, v);
      break;
    }
  }
  return build_graph(n, edges);
}

std::uint64_t labeled_tree_count(int n) {
  check_tree_size(n);
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= static_cast<std::uint64_t>(n);
  return count;
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit) {
  check_tree_size(n);
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    visit(tree_from_pruefer(n, seq));
    // odometer increment, last digit fastest
    int pos = n - 3;
    while (pos >= 0 && ++seq[pos] == n) seq[pos--] = 0;
    if (pos < 0) break;
  }
}

std::vector<Graph> enumerate_labeled_trees(int n) {
  std::vector<Graph> out;
  out.reserve(labeled_tree_count(n));
  for_each_labeled_tree(n, [&](const Graph& t) { out.push_back(t); });
  return out;
}

}  // namespace netcheap
