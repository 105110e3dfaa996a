#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netcheap/json_io.hpp"

namespace netcheap {

// Optional narrowing of a reproduction run to one instance.
struct ReproduceParams {
  std::optional<int> k;
  std::optional<int> l;
  std::optional<int> n;
};

struct ReproduceReport {
  std::string id;
  bool pass = false;
  Json body;
};

// prop2.1, lemma3.1, prop3.1, prop3.2, prop3.3, prop4.1, lemma4.1,
// prop4.2, remark4-exhub
const std::vector<std::string>& reproduce_ids();

// Runs the named check. The report body contains only exact values and
// deterministic decimals, so repeated runs serialize identically.
ReproduceReport reproduce(std::string_view id, const ReproduceParams& params = {});

}  // namespace netcheap
