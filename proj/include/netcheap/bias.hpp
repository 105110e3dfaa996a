#pragma once

#include <map>
#include <vector>

#include "netcheap/myerson.hpp"

namespace netcheap {

// Who talks to whom, and in front of which conference. Witnesses are
// every other conference member.
struct ConversationSpec {
  NodeSet conference;
  NodeId sender = -1;
  NodeId receiver = -1;

  void validate() const;
  NodeSet witnesses() const { return conference.without(sender).without(receiver); }
};

// Loss of `subject`'s Myerson value when `removed` leaves `players`
// (conferences are restricted to the remaining players).
DeltaPoly bias_component(const Graph& g, const ConferenceStructure& h, NodeSet players,
                         NodeId removed, NodeId subject, const ShapleyOptions& options = {});

// Computes bias components against cached Myerson values: one allocation
// for the full player set plus one per removed player. The graph and
// conference structure must outlive the calculator.
class BiasCalculator {
 public:
  BiasCalculator(const Graph& g, const ConferenceStructure& h, NodeSet players,
                 ShapleyOptions options = {});

  const Allocation& full() const { return full_; }
  const Allocation& without(NodeId removed);
  DeltaPoly component(NodeId removed, NodeId subject);

 private:
  const Graph& graph_;
  const ConferenceStructure& conferences_;
  NodeSet players_;
  ShapleyOptions options_;
  Allocation full_;
  std::map<NodeId, Allocation> removed_;
};

struct WitnessComponents {
  NodeId witness = -1;
  DeltaPoly sender_loss;    // sender's loss when the witness is removed
  DeltaPoly witness_loss;   // witness's loss when the receiver is removed
};

struct BiasBreakdown {
  DeltaPoly sender_receiver;  // sender's loss when the receiver is removed
  std::vector<WitnessComponents> witnesses;
  DeltaPoly effective;
};

// All components of a conversation and their average over |W| + 1.
BiasBreakdown bias_breakdown(const Graph& g, const ConferenceStructure& h, NodeSet players,
                             const ConversationSpec& conv, const ShapleyOptions& options = {});

DeltaPoly effective_bias(const Graph& g, const ConferenceStructure& h, NodeSet players,
                         const ConversationSpec& conv, const ShapleyOptions& options = {});

}  // namespace netcheap
