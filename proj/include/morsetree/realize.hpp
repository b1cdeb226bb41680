#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "morsetree/dmf.hpp"
#include "morsetree/induce.hpp"
#include "morsetree/merge_tree.hpp"
#include "morsetree/orders.hpp"

namespace morsetree {

// f = labeling o phi on a path with inner_count(t) edges.
// Throws std::invalid_argument unless the labeling is a Morse labeling.
PathFunction induced_dmf(const MergeTree& t, const Labeling& labeling,
                         Orientation orientation = Orientation::forward);
PathFunction induced_dmf(const MlTree& t, Orientation orientation = Orientation::forward);

PathFunction build_index_ordered_dmf(const MergeTree& t);
PathFunction build_sublevel_connected_dmf(const MergeTree& t);

// One record per considered inner node.
struct StepRecord {
  std::size_t step = 0;
  NodeId node = no_node;
  std::string word;        // path word of the node
  std::string case_tag;    // "L" for the root, else parent+child chirality
  std::array<long long, 3> triple{};  // labels written for (left vertex, edge, right vertex)
  std::optional<long long> m;         // RR/LL only: min considered edge label below the parent
  std::optional<long long> threshold; // vertices above this label were raised by 1
  std::vector<long long> labels;      // the whole path afterwards, left to right
};

// The incremental construction. Starts with the root as (0,2,1); each step
// attaches the next inner node's edge beside its parent's edge and shifts the
// older labels. Invariants are checked after every step and a violation
// throws std::logic_error.
class StepByStep {
 public:
  explicit StepByStep(const MergeTree& t);

  bool done() const { return next_ == no_node && started_; }
  // Performs one step; returns false when nothing is left.
  bool advance();
  void run();

  const std::vector<StepRecord>& records() const { return records_; }
  // Current labels and the node each path simplex stands for.
  const std::vector<long long>& labels() const { return labels_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  PathFunction result() const;

 private:
  NodeId following(NodeId c) const;
  void start();
  void consider(NodeId c);
  std::size_t position_of(NodeId inner) const;
  void check_invariants() const;

  MergeTree tree_;
  std::vector<long long> labels_;
  std::vector<NodeId> nodes_;  // no_node for vertices
  std::vector<bool> considered_;
  std::vector<StepRecord> records_;
  NodeId next_ = no_node;
  bool started_ = false;
};

PathFunction step_by_step_dmf(const MergeTree& t, std::vector<StepRecord>* trace = nullptr);

// "Step 3 (LR) node LLR_ triple (5,6,3): 0 8 2 ..." lines.
std::string format_trace(const std::vector<StepRecord>& trace);

}  // namespace morsetree
