#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "netcheap/catalog.hpp"
#include "netcheap/cheaptalk.hpp"
#include "netcheap/json_io.hpp"
#include "netcheap/reproduce.hpp"
#include "netcheap/scenarios.hpp"
#include "netcheap/trees.hpp"

namespace netcheap::cli {

namespace {

enum class Format { json, csv };

struct Options {
  std::string format = "json";
  int max_players = kDefaultPlayerGuard;

  // network inputs
  std::string graph_path;
  std::string hyperedges_path;
  std::string players;
  std::string conference = "all";
  std::string coalition;
  std::optional<NodeId> sender;
  std::optional<NodeId> receiver;
  std::optional<NodeId> removed;
  std::optional<NodeId> subject;
  std::string delta;
  std::optional<int> partitions;
  bool fast_path = false;

  // scenarios
  std::string kind = "star";
  std::optional<int> k;
  std::optional<int> l;
  std::optional<int> n;
  std::string link = "hub-hub";
  std::vector<std::string> deltas;
  int steps = 100;
  std::string target;
  std::string name;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io_error", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("invalid_json", "'" + path + "': " + e.what());
  }
}

// "0,1,2" or "[0,1,2]"
NodeSet parse_node_list(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](char c) { return c == '[' || c == ']' || c == ' '; }),
             body.end());
  NodeSet s;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int id = -1;
    try {
      id = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error("invalid_node_list", "cannot parse node list '" + text + "'");
    s.insert(id);
  }
  return s;
}

struct Network {
  Graph graph;
  ConferenceStructure conferences;
  NodeSet players;
};

Network load_network(const Options& o) {
  Network net;
  net.graph = graph_from_json(read_json_file(o.graph_path));
  net.conferences = o.hyperedges_path.empty()
                        ? dyadic_conferences(net.graph)
                        : conference_from_json(read_json_file(o.hyperedges_path));
  require_members(net.graph, net.conferences.support(), "conference structure");
  net.players = o.players.empty() ? net.graph.nodes() : parse_node_list(o.players);
  require_members(net.graph, net.players, "player set");
  return net;
}

std::optional<Rational> optional_delta(const Options& o) {
  if (o.delta.empty()) return std::nullopt;
  return DeltaValue(parse_rational(o.delta)).value();
}

ConversationSpec conversation(const Options& o, NodeSet players) {
  if (!o.sender || !o.receiver)
    throw Error("missing_roles", "--sender and --receiver are required");
  ConversationSpec conv;
  conv.sender = *o.sender;
  conv.receiver = *o.receiver;
  if (o.conference == "all") {
    conv.conference = players;
  } else if (o.conference == "pair") {
    conv.conference = NodeSet{conv.sender, conv.receiver};
  } else {
    conv.conference = parse_node_list(o.conference);
  }
  conv.validate();
  return conv;
}

std::string csv_poly_rows(const std::string& item, const DeltaPoly& p) {
  std::string rows;
  for (const auto& [power, c] : p.coefficients())
    rows += item + "," + std::to_string(power) + "," + to_string(c) + "\n";
  return rows;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---- commands ----

int cmd_worth(const Options& o, Format fmt, std::ostream& out) {
  const Network net = load_network(o);
  const NodeSet coalition = o.coalition.empty() ? net.players : parse_node_list(o.coalition);
  require_members(net.graph, coalition, "coalition");
  const auto delta = optional_delta(o);
  const DistanceHistogram hist = distance_histogram(net.graph, coalition);
  const DeltaPoly plain = distance_worth(net.graph, coalition);
  const DeltaPoly restricted = restricted_worth(net.graph, net.conferences, coalition);
  if (fmt == Format::csv) {
    out << "item,power,coefficient\n"
        << csv_poly_rows("distance_worth", plain) << csv_poly_rows("restricted_worth", restricted);
    return 0;
  }
  Json h = Json::object();
  for (auto [t, count] : hist) h[std::to_string(t)] = count;
  Json blocks = Json::array();
  for (NodeSet b : conference_components(coalition, net.conferences))
    blocks.push_back(node_set_to_json(b));
  emit(out, {{"coalition", node_set_to_json(coalition)},
             {"distance_histogram", h},
             {"components", blocks},
             {"distance_worth", poly_to_json(plain, delta)},
             {"restricted_worth", poly_to_json(restricted, delta)}});
  return 0;
}

int cmd_myerson(const Options& o, Format fmt, std::ostream& out) {
  const Network net = load_network(o);
  const auto delta = optional_delta(o);
  Allocation alloc;
  if (o.fast_path) {
    if (net.players != net.graph.nodes() || !(net.conferences == dyadic_conferences(net.graph)))
      throw Error("invalid_fast_path", "--tree-fast-path needs all nodes as players and dyadic conferences");
    alloc = tree_path_sharing(net.graph);
  } else {
    alloc = myerson_conference(net.graph, net.conferences, net.players, {o.max_players});
  }
  if (fmt == Format::csv) {
    out << "node,power,coefficient\n";
    for (const auto& [id, pay] : alloc.payoffs) out << csv_poly_rows(std::to_string(id), pay);
    return 0;
  }
  emit(out, {{"players", node_set_to_json(net.players)},
             {"method", o.fast_path ? "tree_path_sharing" : "shapley_enumeration"},
             {"allocation", allocation_to_json(alloc, delta)}});
  return 0;
}

int cmd_bias(const Options& o, Format fmt, std::ostream& out) {
  const Network net = load_network(o);
  const auto delta = optional_delta(o);
  if (o.removed || o.subject) {
    if (!o.removed || !o.subject)
      throw Error("missing_roles", "--removed and --subject go together");
    const DeltaPoly b = bias_component(net.graph, net.conferences, net.players, *o.removed,
                                       *o.subject, {o.max_players});
    if (fmt == Format::csv) {
      out << "item,power,coefficient\n" << csv_poly_rows("component", b);
      return 0;
    }
    emit(out, {{"removed", *o.removed}, {"subject", *o.subject}, {"component", poly_to_json(b, delta)}});
    return 0;
  }
  const ConversationSpec conv = conversation(o, net.players);
  const BiasBreakdown b = bias_breakdown(net.graph, net.conferences, net.players, conv, {o.max_players});
  if (fmt == Format::csv) {
    out << "item,power,coefficient\n" << csv_poly_rows("sender_over_receiver", b.sender_receiver);
    for (const WitnessComponents& w : b.witnesses) {
      out << csv_poly_rows("sender_over_witness_" + std::to_string(w.witness), w.sender_loss);
      out << csv_poly_rows("witness_" + std::to_string(w.witness) + "_over_receiver", w.witness_loss);
    }
    out << csv_poly_rows("b_eff", b.effective);
    return 0;
  }
  emit(out, bias_to_json(b, conv, delta));
  return 0;
}

Json equilibrium_report(const BiasBreakdown& bias, const ConversationSpec& conv,
                        const Rational& delta, std::optional<int> forced) {
  const CostOffsets offsets = evaluate_offsets(bias, delta);
  auto eq = equilibrium_for(offsets, forced);
  if (!eq)
    throw Error("no_equilibrium", "no partition equilibrium with " + std::to_string(*forced) +
                                      " intervals at this bias");
  Json j = equilibrium_to_json(*eq);
  j["delta"] = {{"exact", to_string(delta)}, {"decimal", to_decimal(delta)}};
  j["bias"] = bias_to_json(bias, conv, delta);
  j["thresholds"] = {{"beta_N", to_string(beta(eq->n_partitions))},
                     {"beta_N_minus_1",
                      eq->n_partitions > 1 ? Json(to_string(beta(eq->n_partitions - 1))) : Json("inf")}};
  return j;
}

void emit_equilibrium_csv(std::ostream& out, const Json& j) {
  out << "k,boundary,action\n";
  const Json& t = j.at("boundaries");
  const Json& a = j.at("actions");
  for (std::size_t k = 0; k < t.size(); ++k)
    out << k << "," << t[k].get<std::string>() << ","
        << (k == 0 ? std::string() : a[k - 1].get<std::string>()) << "\n";
}

int cmd_equilibrium(const Options& o, Format fmt, std::ostream& out) {
  const Network net = load_network(o);
  if (o.delta.empty()) throw Error("missing_delta", "--delta is required");
  const DeltaValue delta(parse_rational(o.delta));
  const ConversationSpec conv = conversation(o, net.players);
  const BiasBreakdown bias =
      bias_breakdown(net.graph, net.conferences, net.players, conv, {o.max_players});
  const Json j = equilibrium_report(bias, conv, delta.value(), o.partitions);
  if (fmt == Format::csv)
    emit_equilibrium_csv(out, j);
  else
    emit(out, j);
  return 0;
}

int cmd_scenario(const Options& o, Format fmt, std::ostream& out) {
  Graph g;
  ConferenceStructure h;
  NodeId sender = -1;
  NodeId receiver = -1;
  Json layout;
  if (o.kind == "star") {
    const StarScenario s = make_star(o.k.value_or(2));
    g = s.graph;
    h = s.conferences;
    sender = s.hub;
    receiver = s.leaves.front();
    layout = {{"hub", s.hub}, {"leaves", s.leaves}};
  } else if (o.kind == "two-star") {
    const TwoStarScenario s = make_two_star({o.k.value_or(1), o.l.value_or(1), parse_link_mode(o.link)});
    g = s.graph;
    h = s.conferences;
    sender = s.sender();
    receiver = s.receiver();
    layout = {{"hub_k", s.hub_k},       {"hub_l", s.hub_l},     {"leaves_k", s.leaves_k},
              {"leaves_l", s.leaves_l}, {"cross_k", s.cross_k}, {"cross_l", s.cross_l},
              {"link", to_string(parse_link_mode(o.link))}};
  } else {
    throw Error("invalid_scenario", "unknown scenario kind '" + o.kind + "' (star or two-star)");
  }
  Options roles = o;
  roles.sender = o.sender.value_or(sender);
  roles.receiver = o.receiver.value_or(receiver);
  const ConversationSpec conv = conversation(roles, g.nodes());
  const BiasBreakdown bias = bias_breakdown(g, h, g.nodes(), conv, {o.max_players});
  const auto delta = optional_delta(o);
  Json j = {{"graph", graph_to_json(g)},
            {"conferences", conference_to_json(h)},
            {"layout", layout},
            {"bias", bias_to_json(bias, conv, delta)}};
  if (delta) j["equilibrium"] = equilibrium_report(bias, conv, *delta, o.partitions);
  if (fmt == Format::csv) {
    out << "item,power,coefficient\n" << csv_poly_rows("b_eff", bias.effective);
    return 0;
  }
  emit(out, j);
  return 0;
}

int cmd_reproduce(const Options& o, Format fmt, std::ostream& out) {
  const ReproduceReport r = reproduce(o.target, {o.k, o.l, o.n});
  if (fmt == Format::csv)
    out << "id,pass\n" << r.id << "," << (r.pass ? "true" : "false") << "\n";
  else
    emit(out, r.body);
  return r.pass ? 0 : 1;
}

int cmd_trees_check(const Options& o, Format fmt, std::ostream& out) {
  if (!o.n) throw Error("missing_n", "--n is required");
  std::vector<Rational> grid;
  for (const std::string& d : o.deltas) grid.push_back(DeltaValue(parse_rational(d)).value());
  if (grid.empty()) grid = decile_grid();
  const FastPathReport fast = check_tree_fast_path(*o.n);
  const bool dominance_applicable = *o.n >= 3;
  StarDominanceReport dom;
  if (dominance_applicable) dom = check_star_dominance(*o.n, grid);
  const bool pass = fast.pass() && (!dominance_applicable || dom.pass());
  if (fmt == Format::csv) {
    out << "n,trees,fast_path_mismatches,dominance_violations,pass\n"
        << *o.n << "," << fast.trees << "," << fast.mismatches << "," << dom.violations << ","
        << (pass ? "true" : "false") << "\n";
    return pass ? 0 : 1;
  }
  Json deltas = Json::array();
  for (const Rational& d : grid) deltas.push_back(to_string(d));
  emit(out, {{"n", *o.n},
             {"trees", fast.trees},
             {"expected_trees", labeled_tree_count(*o.n)},
             {"fast_path_mismatches", fast.mismatches},
             {"deltas", deltas},
             {"star_dominance",
              dominance_applicable
                  ? Json{{"violations", dom.violations},
                         {"ties_above_diameter_2", dom.bad_ties},
                         {"diameter_le_2_not_tied", dom.missing_ties}}
                  : Json("n/a")},
             {"pass", pass}});
  return pass ? 0 : 1;
}

int cmd_curve(const Options& o, Format fmt, std::ostream& out) {
  if (!o.k) throw Error("missing_k", "--k is required");
  if (o.steps < 2 || o.steps > 100000) throw Error("out_of_range", "--steps must be in [2, 100000]");
  std::vector<std::pair<std::string, DeltaPoly>> curves;
  if (o.l) {
    const DeltaPoly hub = two_star_beff({*o.k, *o.l, LinkMode::hub_hub});
    const DeltaPoly leaf = two_star_beff({*o.k, *o.l, LinkMode::leaf_leaf});
    curves = {{"beff_hubhub", hub}, {"beff_leafleaf", leaf}, {"delta_hub_minus_leaf", hub - leaf}};
  } else {
    curves = {{"beff_sender_hub", star_beff_sender_hub(*o.k)}};
    if (*o.k >= 2) curves.emplace_back("beff_witness_hub", star_beff_witness_hub(*o.k));
  }
  std::vector<std::array<std::string, 3>> rows;
  for (int i = 1; i < o.steps; ++i) {
    const Rational d = make_rational(i, o.steps);
    for (const auto& [label, p] : curves) {
      const Rational v = p(d);
      rows.push_back({to_decimal(d), to_decimal(v), label});
      if (label.rfind("beff_", 0) == 0)
        rows.push_back({to_decimal(d), std::to_string(partition_count(v)), "N_" + label.substr(5)});
    }
  }
  if (fmt == Format::json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"delta", r[0]}, {"value", r[1]}, {"label", r[2]}});
    emit(out, arr);
    return 0;
  }
  out << "delta,value,label\n";
  for (const auto& r : rows) out << r[0] << "," << r[1] << "," << r[2] << "\n";
  return 0;
}

int cmd_closed_form(const Options& o, Format, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(o.name);
  std::vector<int> params;
  if (e.arity >= 1) params.push_back(o.k.value_or(2));
  if (e.arity >= 2) params.push_back(o.l.value_or(2));
  const auto delta = optional_delta(o);
  const DeltaPoly p = closed_form(o.name, params);
  Json j = {{"name", o.name}, {"params", params}, {"normative", e.normative},
            {"summary", e.summary}, {"closed_form", poly_to_json(p, delta)}};
  if (e.normative) {
    const DeltaPoly b = brute_force(o.name, params);
    j["brute_force"] = poly_to_json(b, delta);
    j["match"] = b == p;
  }
  emit(out, j);
  return 0;
}

void emit_error(std::ostream& out, const std::string& code, const std::string& message) {
  emit(out, {{"error", {{"code", code}, {"message", message}}}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  if (const char* env = std::getenv(kGuardEnv)) {
    try {
      o.max_players = std::stoi(env);
    } catch (const std::exception&) {
      emit_error(out, "invalid_env", std::string(kGuardEnv) + " must be an integer");
      return 2;
    }
  }

  CLI::App app{"Myerson-value bargaining power and cheap-talk partition equilibria on networks", "netcheap"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-players", o.max_players, "Exact-enumeration player guard");

  auto network_opts = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph_path, "Graph JSON file")->required();
    sub->add_option("--hyperedges", o.hyperedges_path, "Conference structure JSON (default: dyadic)");
    sub->add_option("--players", o.players, "Player set, e.g. 0,1,2 (default: all nodes)");
    sub->add_option("--delta", o.delta, "Link parameter, p/q or decimal");
  };
  auto role_opts = [&](CLI::App* sub) {
    sub->add_option("--sender", o.sender, "Sender node");
    sub->add_option("--receiver", o.receiver, "Receiver node");
    sub->add_option("--conference", o.conference, "Conversation conference: all, pair or a node list");
  };

  auto* worth = app.add_subcommand("worth", "Distance polynomial and restricted worth of a coalition");
  network_opts(worth);
  worth->add_option("--coalition", o.coalition, "Coalition node list (default: all players)");

  auto* myerson = app.add_subcommand("myerson", "Myerson allocation");
  network_opts(myerson);
  myerson->add_flag("--tree-fast-path", o.fast_path, "Use the tree path-sharing rule");

  auto* bias = app.add_subcommand("bias", "Bias components and effective bias");
  network_opts(bias);
  role_opts(bias);
  bias->add_option("--removed", o.removed, "Single component: removed player");
  bias->add_option("--subject", o.subject, "Single component: subject player");

  auto* equilibrium = app.add_subcommand("equilibrium", "Partition equilibrium of a conversation");
  network_opts(equilibrium);
  role_opts(equilibrium);
  equilibrium->add_option("--partitions", o.partitions, "Force the number of intervals");

  auto* scenario = app.add_subcommand("scenario", "Build a star or two-star join and analyse it");
  scenario->add_option("--kind", o.kind, "star or two-star")->check(CLI::IsMember({"star", "two-star"}));
  scenario->add_option("--k", o.k, "Leaves of the (first) star");
  scenario->add_option("--l", o.l, "Leaves of the second star");
  scenario->add_option("--link", o.link, "hub-hub, hub-leaf or leaf-leaf");
  scenario->add_option("--delta", o.delta, "Link parameter");
  scenario->add_option("--partitions", o.partitions, "Force the number of intervals");
  role_opts(scenario);

  auto* repro = app.add_subcommand("reproduce", "Run a named verification target");
  repro->add_option("target", o.target, "prop2.1 lemma3.1 prop3.1 prop3.2 prop3.3 prop4.1 lemma4.1 prop4.2 remark4-exhub")
      ->required();
  repro->add_option("--k", o.k, "Restrict to one k");
  repro->add_option("--l", o.l, "Restrict to one l");
  repro->add_option("--n", o.n, "Restrict to one tree size");

  auto* trees = app.add_subcommand("trees-check", "Exhaustive labeled-tree checks");
  trees->add_option("--n", o.n, "Tree size (2..8)");
  trees->add_option("--delta", o.deltas, "Grid point(s); default 0.1..0.9");

  auto* curve = app.add_subcommand("curve", "Sampled b_eff, Delta and N curves as CSV");
  curve->add_option("--k", o.k, "Leaves of the (first) star");
  curve->add_option("--l", o.l, "Leaves of the second star (two-star curves)");
  curve->add_option("--steps", o.steps, "Grid denominator; samples i/steps for 0 < i < steps");
  curve->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* closed = app.add_subcommand("closed-form", "Evaluate a catalog closed form against brute force");
  closed->add_option("name", o.name, "Catalog entry")->required();
  closed->add_option("--k", o.k, "First parameter");
  closed->add_option("--l", o.l, "Second parameter");
  closed->add_option("--delta", o.delta, "Link parameter");

  bool curve_default_csv = true;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    curve_default_csv = app.get_option("--format")->count() == 0 &&
                        curve->get_option("--format")->count() == 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(out, "usage", e.what());
    return 2;
  }

  try {
    Format fmt = o.format == "csv" ? Format::csv : Format::json;
    if (curve->parsed() && curve_default_csv) fmt = Format::csv;
    if (worth->parsed()) return cmd_worth(o, fmt, out);
    if (myerson->parsed()) return cmd_myerson(o, fmt, out);
    if (bias->parsed()) return cmd_bias(o, fmt, out);
    if (equilibrium->parsed()) return cmd_equilibrium(o, fmt, out);
    if (scenario->parsed()) return cmd_scenario(o, fmt, out);
    if (repro->parsed()) return cmd_reproduce(o, fmt, out);
    if (trees->parsed()) return cmd_trees_check(o, fmt, out);
    if (curve->parsed()) return cmd_curve(o, fmt, out);
    if (closed->parsed()) return cmd_closed_form(o, fmt, out);
  } catch (const Error& e) {
    emit_error(out, e.code(), e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(out, "internal", e.what());
    return 3;
  }
  emit_error(out, "usage", "no command given");
  return 2;
}

}  // namespace netcheap::cli
