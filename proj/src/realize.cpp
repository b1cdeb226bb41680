#include "morsetree/realize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace morsetree {

PathFunction induced_dmf(const MergeTree& t, const Labeling& labeling, Orientation orientation) {
  if (!is_morse_labeling(t, labeling))
    throw std::invalid_argument("labeling is not a Morse labeling of the tree");
  OrientedPath path = OrientedPath::standard(t.inner_count() + 1);
  auto nodes = order_isomorphism(path, t, orientation);
  std::vector<Rational> values;
  values.reserve(nodes.size());
  for (NodeId n : nodes) values.push_back(labeling[n]);
  return PathFunction(std::move(path), std::move(values));
}

PathFunction induced_dmf(const MlTree& t, Orientation orientation) {
  return induced_dmf(t.tree, t.labels, orientation);
}

PathFunction build_index_ordered_dmf(const MergeTree& t) {
  return induced_dmf(t, labeling_from_order(t, index_morse_order(t)));
}

PathFunction build_sublevel_connected_dmf(const MergeTree& t) {
  return induced_dmf(t, labeling_from_order(t, sublevel_connected_morse_order(t)));
}

StepByStep::StepByStep(const MergeTree& t) : tree_(t), considered_(t.size(), false) {}

void StepByStep::start() {
  started_ = true;
  NodeId root = tree_.root();
  StepRecord rec;
  rec.step = 0;
  rec.node = root;
  rec.word = path_word(tree_, root);
  rec.case_tag = "L";
  if (tree_.is_leaf(root)) {
    labels_ = {0};
    nodes_ = {no_node};
    rec.triple = {0, 0, 0};
    rec.labels = labels_;
    records_.push_back(rec);
    next_ = no_node;
    return;
  }
  labels_ = {0, 2, 1};
  nodes_ = {no_node, root, no_node};
  considered_[root] = true;
  rec.triple = {0, 2, 1};
  rec.labels = labels_;
  records_.push_back(rec);
  check_invariants();
  next_ = following(root);
}

// After c: its child of opposite chirality, then the other child, then back
// up. Considered nodes are skipped on the way.
NodeId StepByStep::following(NodeId c) const {
  if (tree_.is_inner(c)) {
    Chirality own = tree_.chirality(c);
    for (NodeId child : {tree_.child(c, opposite(own)), tree_.child(c, own)})
      if (tree_.is_inner(child) && !considered_[child]) return child;
  }
  return tree_.parent(c);
}

std::size_t StepByStep::position_of(NodeId inner) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), inner);
  if (it == nodes_.end()) throw std::logic_error("node has no simplex yet");
  return static_cast<std::size_t>(it - nodes_.begin());
}

void StepByStep::consider(NodeId c) {
  NodeId p = tree_.parent(c);
  std::size_t i = position_of(p);
  long long x = labels_[i - 1], y = labels_[i], z = labels_[i + 1];
  Chirality pc = tree_.chirality(p), cc = tree_.chirality(c);
  StepRecord rec;
  rec.step = records_.size();
  rec.node = c;
  rec.word = path_word(tree_, c);
  rec.case_tag = {letter(pc), letter(cc)};

  long long old_min_edge = 0;
  bool first_edge = true;
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    if (nodes_[j] != no_node && (first_edge || labels_[j] < old_min_edge)) {
      old_min_edge = labels_[j];
      first_edge = false;
    }

  if (pc != cc) {
    rec.triple = {z + 1, y + 1, x + 1};
  } else {
    long long m = 0;
    bool found = false;
    for (std::size_t j = 0; j < nodes_.size(); ++j)
      if (nodes_[j] != no_node && is_ancestor_or_self(tree_, p, nodes_[j]) && (!found || labels_[j] < m)) {
        m = labels_[j];
        found = true;
      }
    rec.m = m;
    rec.triple = cc == Chirality::right ? std::array<long long, 3>{z + 1, m + 1, z}
                                        : std::array<long long, 3>{x, m + 1, x + 1};
  }
  // LR and RR attach on the right of s(p), RL and LL on the left.
  long long threshold = cc == Chirality::right ? z : x;
  rec.threshold = threshold;
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    if (nodes_[j] != no_node) labels_[j] += 2;
    else if (labels_[j] > threshold) labels_[j] += 1;
  }
  if (cc == Chirality::right) {
    labels_[i + 1] = rec.triple[0];
    labels_.insert(labels_.begin() + static_cast<std::ptrdiff_t>(i + 2), {rec.triple[1], rec.triple[2]});
    nodes_.insert(nodes_.begin() + static_cast<std::ptrdiff_t>(i + 2), {c, no_node});
  } else {
    labels_[i - 1] = rec.triple[2];
    labels_.insert(labels_.begin() + static_cast<std::ptrdiff_t>(i - 1), {rec.triple[0], rec.triple[1]});
    nodes_.insert(nodes_.begin() + static_cast<std::ptrdiff_t>(i - 1), {no_node, c});
  }
  considered_[c] = true;
  rec.labels = labels_;
  records_.push_back(rec);

  check_invariants();
  // the new edge carries the smallest edge label, one above the old minimum
  std::size_t at = position_of(c);
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    if (nodes_[j] != no_node && labels_[j] < labels_[at])
      throw std::logic_error("new edge does not have the smallest edge label");
  if (labels_[at] != old_min_edge + 1)
    throw std::logic_error("new edge label is not the old minimum plus one");
  // fresh boundary labels differ by exactly one
  long long a = labels_[at - 1], g = labels_[at + 1];
  if (cc == Chirality::left ? g != a + 1 : a != g + 1)
    throw std::logic_error("boundary labels of the new edge are not adjacent");
}

void StepByStep::check_invariants() const {
  std::vector<long long> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j)
    if (sorted[j] != static_cast<long long>(j)) throw std::logic_error("labels are not 0..n-1");
  long long max_vertex = -1, min_edge = static_cast<long long>(labels_.size());
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    if (nodes_[j] == no_node) {
      max_vertex = std::max(max_vertex, labels_[j]);
    } else {
      min_edge = std::min(min_edge, labels_[j]);
      // chirality of the node decides which boundary vertex is lower
      bool left_lower = labels_[j - 1] < labels_[j + 1];
      if (left_lower != (tree_.chirality(nodes_[j]) == Chirality::left))
        throw std::logic_error("boundary order disagrees with chirality at " +
                               path_word(tree_, nodes_[j]));
    }
  }
  if (max_vertex + 1 != min_edge) throw std::logic_error("vertex and edge labels are not adjacent blocks");
}

bool StepByStep::advance() {
  if (!started_) {
    start();
    return true;
  }
  while (next_ != no_node && considered_[next_]) next_ = following(next_);
  if (next_ == no_node) return false;
  consider(next_);
  next_ = following(next_);
  while (next_ != no_node && considered_[next_]) next_ = following(next_);
  return true;
}

void StepByStep::run() {
  while (advance()) {
  }
}

PathFunction StepByStep::result() const {
  std::vector<Rational> values;
  for (long long v : labels_) values.emplace_back(v);
  return PathFunction(std::move(values));
}

PathFunction step_by_step_dmf(const MergeTree& t, std::vector<StepRecord>* trace) {
  StepByStep machine(t);
  machine.run();
  if (trace) *trace = machine.records();
  return machine.result();
}

std::string format_trace(const std::vector<StepRecord>& trace) {
  std::ostringstream out;
  for (const auto& r : trace) {
    out << "Step " << r.step << " (" << r.case_tag << ") node " << r.word << " triple (" << r.triple[0]
        << "," << r.triple[1] << "," << r.triple[2] << ")";
    if (r.m) out << " m=" << *r.m;
    if (r.threshold) out << " raise>" << *r.threshold;
    out << ":";
    for (long long v : r.labels) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace morsetree
