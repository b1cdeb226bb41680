#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morsetree/dmf.hpp"
#include "morsetree/induce.hpp"
#include "morsetree/merge_tree.hpp"
#include "morsetree/orders.hpp"

namespace morsetree {

// Merge tree whose chirality comes from the path orientation: the child for
// the component lying to the left is L.
struct CMlTree {
  MergeTree tree;
  Labeling labels;

  std::string text() const { return to_text(tree, labels); }
};

// Throws UnsupportedRegime on matched cells, MorseViolation on invalid input.
CMlTree induced_cml_tree(const PathFunction& f);

// Mirror image of the subtree below `node`; labels stay with their nodes.
CMlTree reflect_subtree(const CMlTree& t, NodeId node);
std::optional<NodeId> node_with_label(const MergeTree& t, const Labeling& labels,
                                      const Rational& label);

// Reflections (applied in order) turning `from` into `to`, when both have the
// same labeled tree up to swapping children. nullopt otherwise.
std::optional<std::vector<NodeId>> reflection_sequence(const CMlTree& from, const CMlTree& to);

// Re-chooses chirality by the elder rule: the child holding the smaller
// label inherits the parent's chirality.
MlTree js_quotient(const CMlTree& t);

// The representative whose path order matches the elder-rule chirality:
// the function induced by the Ml tree of f.
PathFunction o_js(const PathFunction& f);

struct PLFunction {
  std::vector<std::pair<Rational, Rational>> breakpoints;  // (position, value)

  friend bool operator==(const PLFunction&, const PLFunction&) = default;
};

// Throws std::invalid_argument with a reason if the breakpoints are not
// strictly increasing from 0 to 1 with distinct, alternating min/max values
// and minima at both ends.
void check_pl(const PLFunction& pl);

// Vertex i sits at i/k and edge i (between vertices i-1 and i) at (2i-1)/2k.
// Throws UnsupportedRegime on matched cells.
PLFunction dmf_to_pl(const PathFunction& f);
PathFunction pl_to_dmf(const PLFunction& pl);

// Lines "<num>/<den> <value>".
PLFunction parse_pl(std::string_view text);
std::string format_pl(const PLFunction& pl);

}  // namespace morsetree
