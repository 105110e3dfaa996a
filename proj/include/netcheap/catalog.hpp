#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "netcheap/delta_poly.hpp"

namespace netcheap {

// Closed-form expressions for star and two-star quantities.
//
// Parameters are (k) for single-star entries, (k, l) for two-star entries
// and () for the fixed (2,2) ex-hub entries. Non-normative entries are
// uncorrected expressions that disagree with the brute-force pipeline; they
// are kept for comparison only.
struct CatalogEntry {
  std::string_view name;
  int arity;
  int min_first;   // lower bound on k
  bool normative;
  std::string_view summary;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view name);

DeltaPoly closed_form(std::string_view name, std::span<const int> params);
inline DeltaPoly closed_form(std::string_view name, std::initializer_list<int> params) {
  return closed_form(name, std::span<const int>(params.begin(), params.size()));
}

// The same quantity computed by brute force. Defined for normative entries.
DeltaPoly brute_force(std::string_view name, std::span<const int> params);
inline DeltaPoly brute_force(std::string_view name, std::initializer_list<int> params) {
  return brute_force(name, std::span<const int>(params.begin(), params.size()));
}

}  // namespace netcheap
