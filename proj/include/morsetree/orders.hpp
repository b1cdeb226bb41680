#pragma once

#include <string>
#include <vector>

#include "morsetree/complex.hpp"
#include "morsetree/merge_tree.hpp"
#include "morsetree/rational.hpp"

namespace morsetree {

// A total order on the nodes of a tree, listed ascending.
using MorseOrder = std::vector<NodeId>;
// A value per node, indexed by NodeId.
using Labeling = std::vector<Rational>;

// Leaves first, then inner nodes. Inside each class, at the youngest common
// ancestor the side with the ancestor's own chirality comes first, and a
// descendant comes before its ancestor.
MorseOrder index_morse_order(const MergeTree& t);
// The same comparison without separating leaves from inner nodes.
MorseOrder sublevel_connected_morse_order(const MergeTree& t);

// (1) every subtree has its maximum at its root, and (2) its minimum lies in
// the child subtree whose chirality equals the subtree root's.
bool is_morse_order(const MergeTree& t, const MorseOrder& order);
bool is_morse_labeling(const MergeTree& t, const Labeling& labeling);
// Only property (1).
bool is_curry_morse_order(const MergeTree& t, const MorseOrder& order);
bool is_curry_morse_labeling(const MergeTree& t, const Labeling& labeling);

// Ranks 0..n-1. Throws std::invalid_argument if `order` is not a permutation.
Labeling labeling_from_order(const MergeTree& t, const MorseOrder& order);
// Throws std::invalid_argument if the labeling is not injective.
MorseOrder order_from_labeling(const MergeTree& t, const Labeling& labeling);
// Replaces labels by their ranks.
Labeling rank_labeling(const MergeTree& t, const Labeling& labeling);

// The simplex order on nodes: in-order traversal.
std::vector<NodeId> simplex_order_tree(const MergeTree& t);
// v0 < e01 < v1 < ... as simplex ids of p.tree().
std::vector<SimplexId> simplex_order_path(const OrientedPath& p);

enum class Orientation { forward, mirrored };

// result[j] is the node matched with the j-th simplex of p from the left.
// With `mirrored` the j-th simplex from the right is used instead.
// Throws std::invalid_argument unless p has inner_count(t) edges.
std::vector<NodeId> order_isomorphism(const OrientedPath& p, const MergeTree& t,
                                      Orientation orientation = Orientation::forward);

// Whitespace-separated path words, ascending.
std::string format_order(const MergeTree& t, const MorseOrder& order);

}  // namespace morsetree
