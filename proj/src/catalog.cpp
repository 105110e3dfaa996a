#include "netcheap/catalog.hpp"

#include <algorithm>
#include <string>

#include "netcheap/conference.hpp"
#include "netcheap/myerson.hpp"
#include "netcheap/scenarios.hpp"

namespace netcheap {

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

// sum of c_i d^i for the listed coefficients, starting at d^1
DeltaPoly poly(std::initializer_list<Rational> from_linear) {
  DeltaPoly p;
  unsigned power = 1;
  for (const Rational& c : from_linear) p += DeltaPoly::monomial(power++, c);
  return p;
}

long choose2(long n) { return n * (n - 1) / 2; }

const std::vector<CatalogEntry> kEntries = {
    {"mu_star_hub", 1, 1, true, "hub payoff on S_k: k d + k(k-1)/3 d^2"},
    {"mu_star_leaf", 1, 1, true, "leaf payoff on S_k: d + 2(k-1)/3 d^2"},
    {"beff_sender_hub", 1, 1, true, "whole-star conference, hub speaking: d + 2(k+1)(k-1)/(3k) d^2"},
    {"beff_witness_hub", 1, 2, true, "whole-star conference, hub witnessing: (2d + (4k-5)(2/3)d^2)/k"},
    {"two_star_diff", 2, 1, true, "big star (hub->leaf) minus two-star (hub->hub): kl d^2/m (4/3 - 5/2 d)"},
    {"beff_bigstar", 2, 1, true, "S_m whole conference, hub->leaf: d + 2/3 (m - 1/m) d^2"},
    {"beff_hubhub", 2, 1, true, "hub-hub join whole conference: d + 2/3 (m - 1/m - 2kl/m) d^2 + 5kl/(2m) d^3"},
    {"bSR_hubhub", 2, 1, true, "pair conference hub->hub: d + 2/3 (k+l) d^2 + kl/2 d^3"},
    {"bSR_bigstar", 2, 1, true, "pair conference on S_m, hub->leaf: d + 2/3 (k+l) d^2"},
    {"bSR_hubleaf", 2, 1, true, "pair conference h_k -> own leaf on the hub-hub join: d + 2k/3 d^2 + l/2 d^3"},
    {"bSR_leafleaf", 2, 1, true, "pair conference leaf -> leaf across the hub-hub join: d^3/2"},
    {"mu_S_twostar", 2, 1, true, "payoff of h_k on the hub-hub join"},
    {"mu_S_leafleaf", 2, 1, true, "payoff of the linked leaf of S_k on the leaf-leaf join"},
    {"v_hubhub", 2, 1, true, "total worth of the hub-hub join"},
    {"v_leafleaf", 2, 1, true, "total worth of the leaf-leaf join"},
    {"beff_leafleaf", 2, 1, true, "leaf-leaf join whole conference, linked leaves talking"},
    {"delta_hub_leaf", 2, 1, true, "beff_hubhub - beff_leafleaf"},
    {"exhub_witness_receiver", 0, 0, true, "(2,2) leaf-leaf join: ex-hub witness's loss when R leaves"},
    {"exhub_sender_witness", 0, 0, true, "(2,2) leaf-leaf join: S's loss when the ex-hub leaves"},
    {"exleaf_witness_receiver", 0, 0, true, "(2,2) hub-hub join: ex-leaf witness's loss when R leaves"},
    {"exleaf_sender_witness", 0, 0, true, "(2,2) hub-hub join: S's loss when the ex-leaf leaves"},
    {"mu_S_leafleaf_as_written", 2, 1, false,
     "uncorrected leaf-leaf sender payoff (constant 2/5(k+l-2) term, d^3 on the last term)"},
    {"beff_leafleaf_as_written", 2, 1, false,
     "uncorrected leaf-leaf effective bias (missing 1/m on the d^3..d^5 terms)"},
};

void check_params(const CatalogEntry& e, std::span<const int> params) {
  if (static_cast<int>(params.size()) != e.arity)
    throw Error("invalid_params", std::string(e.name) + " takes " + std::to_string(e.arity) +
                                      " parameter(s), got " + std::to_string(params.size()));
  if (e.arity >= 1 && params[0] < e.min_first)
    throw Error("out_of_range", std::string(e.name) + " needs k >= " + std::to_string(e.min_first));
  if (e.arity >= 2 && params[1] < 1)
    throw Error("out_of_range", std::string(e.name) + " needs l >= 1");
}

}  // namespace

const std::vector<CatalogEntry>& catalog() { return kEntries; }

const CatalogEntry& catalog_entry(std::string_view name) {
  auto it = std::find_if(kEntries.begin(), kEntries.end(),
                         [&](const CatalogEntry& e) { return e.name == name; });
  if (it == kEntries.end())
    throw Error("unknown_closed_form", "no closed form named '" + std::string(name) + "'");
  return *it;
}

DeltaPoly closed_form(std::string_view name, std::span<const int> params) {
  const CatalogEntry& e = catalog_entry(name);
  check_params(e, params);
  const long k = e.arity >= 1 ? params[0] : 2;
  const long l = e.arity >= 2 ? params[1] : 2;
  const long m = k + l + 1;

  if (name == "mu_star_hub") return poly({q(k), q(k * (k - 1), 3)});
  if (name == "mu_star_leaf") return poly({q(1), q(2 * (k - 1), 3)});
  if (name == "beff_sender_hub") return poly({q(1), q(2 * (k + 1) * (k - 1), 3 * k)});
  if (name == "beff_witness_hub") return poly({q(2), q(4 * k - 5) * q(2, 3)}) / q(k);
  if (name == "two_star_diff") return poly({q(0), q(4 * k * l, 3 * m), q(-5 * k * l, 2 * m)});
  if (name == "beff_bigstar") return poly({q(1), q(2, 3) * (q(m) - q(1, m))});
  if (name == "beff_hubhub")
    return poly({q(1), q(2, 3) * (q(m) - q(1, m) - q(2 * k * l, m)), q(5 * k * l, 2 * m)});
  if (name == "bSR_hubhub") return poly({q(1), q(2 * (k + l), 3), q(k * l, 2)});
  if (name == "bSR_bigstar") return poly({q(1), q(2 * (k + l), 3)});
  if (name == "bSR_hubleaf") return poly({q(1), q(2 * k, 3), q(l, 2)});
  if (name == "bSR_leafleaf") return poly({q(0), q(0), q(1, 2)});
  if (name == "mu_S_twostar") return poly({q(k + 1), q(k * k + k + 2 * l, 3), q(k * l, 2)});
  if (name == "mu_S_leafleaf")
    return poly({q(2), q(2 * (k + 1), 3), q(k + l - 1, 2), q(2 * (k + l - 2), 5),
                 q((k - 1) * (l - 1), 3)});
  if (name == "v_hubhub")
    return poly({q(2 * (k + l + 1)), q(2 * (choose2(k) + choose2(l) + k + l)), q(2 * k * l)});
  if (name == "v_leafleaf")
    return poly({q(2 * (k + l + 1)), q(2 * (choose2(k) + choose2(l) + 2)), q(2 * (k + l - 1)),
                 q(2 * (k + l - 2)), q(2 * (k * l - k - l + 1))});
  if (name == "beff_leafleaf")
    return poly({q(3, m), q(4, 3), q(5 * (m - 2), 2 * m), q(14 * (m - 3), 5 * m),
                 q(3 * (k - 1) * (l - 1), m)});
  if (name == "delta_hub_leaf")
    return poly({q(1) - q(3, m), q(2, 3) * (q(m) - q(1, m) - q(2 * k * l, m) - 2),
                 q(5 * (k * l - m + 2), 2 * m), q(-14 * (m - 3), 5 * m),
                 q(-3 * (k - 1) * (l - 1), m)});
  if (name == "exhub_witness_receiver") return poly({q(0), q(2, 3), q(1), q(4, 5), q(1, 3)});
  if (name == "exhub_sender_witness") return poly({q(1), q(4, 3), q(1), q(4, 5), q(1, 3)});
  if (name == "exleaf_witness_receiver") return poly({q(0), q(2, 3), q(1)});
  if (name == "exleaf_sender_witness") return poly({q(1), q(4, 3), q(1)});
  if (name == "mu_S_leafleaf_as_written")
    return DeltaPoly::constant(q(2 * (k + l - 2), 5)) +
           poly({q(2), q(2 * (k + 1), 3), q(k + l - 1, 2) + q((k - 1) * (l - 1), 3)});
  if (name == "beff_leafleaf_as_written")
    return poly({q(3, m), q(4, 3), q(5 * (m - 2), 2), q(14 * (m - 3), 5), q(3 * (k - 1) * (l - 1))});
  throw Error("unknown_closed_form", "no closed form named '" + std::string(name) + "'");
}

DeltaPoly brute_force(std::string_view name, std::span<const int> params) {
  const CatalogEntry& e = catalog_entry(name);
  check_params(e, params);
  if (!e.normative)
    throw Error("non_normative", std::string(name) + " has no brute-force counterpart");
  const int k = e.arity >= 1 ? params[0] : 2;
  const int l = e.arity >= 2 ? params[1] : 2;

  if (name == "mu_star_hub" || name == "mu_star_leaf") {
    StarScenario s = make_star(k);
    Allocation mu = myerson_conference(s.graph, s.conferences, s.graph.nodes());
    return mu.at(name == "mu_star_hub" ? s.hub : s.leaves.front());
  }
  if (name == "beff_sender_hub") return star_beff_sender_hub(k);
  if (name == "beff_witness_hub") return star_beff_witness_hub(k);
  if (name == "beff_bigstar") return star_beff_sender_hub(k + l + 1);
  if (name == "beff_hubhub") return two_star_beff({k, l, LinkMode::hub_hub});
  if (name == "beff_leafleaf") return two_star_beff({k, l, LinkMode::leaf_leaf});
  if (name == "two_star_diff")
    return star_beff_sender_hub(k + l + 1) - two_star_beff({k, l, LinkMode::hub_hub});
  if (name == "delta_hub_leaf") return hub_leaf_difference(k, l);
  if (name == "bSR_hubhub") return protocol_bias(k, l, Protocol::hub_to_hub);
  if (name == "bSR_bigstar") return protocol_bias(k, l, Protocol::bigstar_hub_to_leaf);
  if (name == "bSR_hubleaf") return protocol_bias(k, l, Protocol::hub_to_leaf);
  if (name == "bSR_leafleaf") return protocol_bias(k, l, Protocol::leaf_to_leaf);
  if (name == "mu_S_twostar" || name == "mu_S_leafleaf") {
    TwoStarScenario s =
        make_two_star({k, l, name == "mu_S_twostar" ? LinkMode::hub_hub : LinkMode::leaf_leaf});
    return myerson_conference(s.graph, s.conferences, s.graph.nodes()).at(s.sender());
  }
  if (name == "v_hubhub" || name == "v_leafleaf") {
    TwoStarScenario s =
        make_two_star({k, l, name == "v_hubhub" ? LinkMode::hub_hub : LinkMode::leaf_leaf});
    return distance_worth(s.graph, s.graph.nodes());
  }
  const ExHubBiases ex = exhub_biases(2, 2);
  if (name == "exhub_witness_receiver") return ex.exhub_over_receiver;
  if (name == "exhub_sender_witness") return ex.sender_over_exhub;
  if (name == "exleaf_witness_receiver") return ex.exleaf_over_receiver;
  if (name == "exleaf_sender_witness") return ex.sender_over_exleaf;
  throw Error("unknown_closed_form", "no brute-force route for '" + std::string(name) + "'");
}

}  // namespace netcheap
