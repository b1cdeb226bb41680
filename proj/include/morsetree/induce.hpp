#pragma once

#include <vector>

#include "morsetree/dmf.hpp"
#include "morsetree/merge_tree.hpp"
#include "morsetree/orders.hpp"

namespace morsetree {

struct MlTree {
  MergeTree tree;
  Labeling labels;

  std::string text() const { return to_text(tree, labels); }
};

struct InducedTree {
  MlTree ml;
  // The critical simplex whose value labels each node.
  std::vector<SimplexId> simplex_of_node;
  // True when f has no critical edge and the result is one leaf.
  bool single_leaf = false;
};

// Builds the merge tree of the sublevel filtration: critical edges from the
// top down, each splitting its component into the two sides below it. The
// side with the smaller minimum keeps the parent's chirality. Children are
// created lower-minimum side first.
// Throws MorseViolation if f is not a discrete Morse function.
InducedTree induce(const DiscreteMorseFunction& f);

MlTree induced_ml_tree(const DiscreteMorseFunction& f);
MlTree induced_ml_tree(const PathFunction& f);
MergeTree induced_merge_tree(const DiscreteMorseFunction& f);
MergeTree induced_merge_tree(const PathFunction& f);

}  // namespace morsetree
