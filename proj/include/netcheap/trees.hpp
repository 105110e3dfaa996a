#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "netcheap/graph.hpp"

namespace netcheap {

inline constexpr int kMinTreeNodes = 2;
inline constexpr int kMaxTreeNodes = 8;

// Decodes a Prüfer sequence of length n-2 over [0, n) into a labeled tree.
Graph tree_from_pruefer(int n, std::span<const int> sequence);

// Visits all n^(n-2) labeled trees on n nodes, in lexicographic order of
// their Prüfer sequences. 2 <= n <= 8.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_labeled_trees(int n);

std::uint64_t labeled_tree_count(int n);

}  // namespace netcheap
