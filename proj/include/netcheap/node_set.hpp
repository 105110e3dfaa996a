#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "netcheap/error.hpp"

namespace netcheap {

using NodeId = int;

// Node ids live in [0, kMaxNodes); sets are single-word bitmasks.
inline constexpr int kMaxNodes = 64;

class NodeSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = NodeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const NodeId*;
    using reference = NodeId;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    NodeId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<NodeId> ids) {
    for (NodeId id : ids) insert(id);
  }

  static NodeSet from_ids(const std::vector<NodeId>& ids) {
    NodeSet s;
    for (NodeId id : ids) s.insert(id);
    return s;
  }

  // {0, ..., n-1}
  static NodeSet first(int n) {
    if (n < 0 || n > kMaxNodes)
      throw Error("out_of_range", "node count " + std::to_string(n) +
                                      " outside [0, 64]");
    if (n == 0) return NodeSet{};
    return NodeSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  bool contains(NodeId id) const {
    return id >= 0 && id < kMaxNodes && ((bits_ >> id) & 1U) != 0;
  }

  NodeSet& insert(NodeId id) {
    check_id(id);
    bits_ |= std::uint64_t{1} << id;
    return *this;
  }
  NodeSet& erase(NodeId id) {
    check_id(id);
    bits_ &= ~(std::uint64_t{1} << id);
    return *this;
  }
  NodeSet with(NodeId id) const { return NodeSet(*this).insert(id); }
  NodeSet without(NodeId id) const { return NodeSet(*this).erase(id); }

  // Lowest member; undefined on the empty set.
  NodeId front() const { return std::countr_zero(bits_); }

  constexpr bool is_subset_of(NodeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(NodeSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<NodeId> to_vector() const { return {begin(), end()}; }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) {
    return NodeSet(a.bits_ | b.bits_);
  }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) {
    return NodeSet(a.bits_ & b.bits_);
  }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) {
    return NodeSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(NodeSet, NodeSet) = default;
  friend constexpr auto operator<=>(NodeSet, NodeSet) = default;

 private:
  static void check_id(NodeId id) {
    if (id < 0 || id >= kMaxNodes)
      throw Error("out_of_range", "node id " + std::to_string(id) +
                                      " outside [0, 64)");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace netcheap
