#include "netcheap/bias.hpp"

#include <string>

namespace netcheap {

void ConversationSpec::validate() const {
  if (conference.size() < 2)
    throw Error("invalid_conversation", "conversation conference needs at least two members");
  if (sender == receiver)
    throw Error("invalid_conversation", "sender and receiver must differ");
  if (!conference.contains(sender))
    throw Error("invalid_conversation", "sender " + std::to_string(sender) + " is not in the conference");
  if (!conference.contains(receiver))
    throw Error("invalid_conversation", "receiver " + std::to_string(receiver) + " is not in the conference");
}

namespace {

void check_roles(NodeSet players, NodeId removed, NodeId subject) {
  if (removed == subject)
    throw Error("invalid_roles", "removed player and subject must differ");
  if (!players.contains(removed))
    throw Error("not_a_player", "removed node " + std::to_string(removed) + " is not a player");
  if (!players.contains(subject))
    throw Error("not_a_player", "subject node " + std::to_string(subject) + " is not a player");
}

}  // namespace

DeltaPoly bias_component(const Graph& g, const ConferenceStructure& h, NodeSet players,
                         NodeId removed, NodeId subject, const ShapleyOptions& options) {
  check_roles(players, removed, subject);
  const Allocation full = myerson_conference(g, h, players, options);
  const NodeSet rest = players.without(removed);
  const Allocation reduced =
      myerson_conference(g, restrict_conferences(h, rest), rest, options);
  return full.at(subject) - reduced.at(subject);
}

BiasCalculator::BiasCalculator(const Graph& g, const ConferenceStructure& h, NodeSet players,
                               ShapleyOptions options)
    : graph_(g),
      conferences_(h),
      players_(players),
      options_(options),
      full_(myerson_conference(g, h, players, options)) {}

const Allocation& BiasCalculator::without(NodeId removed) {
  auto it = removed_.find(removed);
  if (it == removed_.end()) {
    const NodeSet rest = players_.without(removed);
    it = removed_
             .emplace(removed, myerson_conference(graph_, restrict_conferences(conferences_, rest),
                                                  rest, options_))
             .first;
  }
  return it->second;
}

DeltaPoly BiasCalculator::component(NodeId removed, NodeId subject) {
  check_roles(players_, removed, subject);
  return full_.at(subject) - without(removed).at(subject);
}

BiasBreakdown bias_breakdown(const Graph& g, const ConferenceStructure& h, NodeSet players,
                             const ConversationSpec& conv, const ShapleyOptions& options) {
  conv.validate();
  if (!conv.conference.is_subset_of(players))
    throw Error("invalid_conversation", "conversation conference must lie inside the player set");
  BiasCalculator calc(g, h, players, options);
  BiasBreakdown out;
  out.sender_receiver = calc.component(conv.receiver, conv.sender);
  DeltaPoly sum = out.sender_receiver;
  for (NodeId w : conv.witnesses()) {
    WitnessComponents wc{w, calc.component(w, conv.sender), calc.component(conv.receiver, w)};
    sum += wc.sender_loss;
    sum += wc.witness_loss;
    out.witnesses.push_back(std::move(wc));
  }
  out.effective = sum / Rational(static_cast<long>(out.witnesses.size() + 1));
  return out;
}

DeltaPoly effective_bias(const Graph& g, const ConferenceStructure& h, NodeSet players,
                         const ConversationSpec& conv, const ShapleyOptions& options) {
  return bias_breakdown(g, h, players, conv, options).effective;
}

}  // namespace netcheap
