#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morsetree/rational.hpp"

namespace morsetree {

enum class Chirality : unsigned char { left, right };

inline Chirality opposite(Chirality c) {
  return c == Chirality::left ? Chirality::right : Chirality::left;
}
inline char letter(Chirality c) { return c == Chirality::left ? 'L' : 'R'; }

using NodeId = std::size_t;
inline constexpr NodeId no_node = std::numeric_limits<NodeId>::max();

// Full rooted binary tree in which every child carries a chirality. The child
// stored in `left` always has chirality L and the one in `right` has R; the
// chirality field is kept on each node so subtrees remember it.
class MergeTree {
 public:
  struct Node {
    NodeId parent = no_node;
    NodeId left = no_node;
    NodeId right = no_node;
    Chirality chirality = Chirality::left;
  };

  // A single leaf.
  MergeTree();

  // Turns a leaf into an inner node with two new leaf children and returns
  // (left, right). `first` decides which child gets the smaller node id.
  std::pair<NodeId, NodeId> split(NodeId leaf, Chirality first = Chirality::left);

  // Exchanges the two children of an inner node. Each child keeps its
  // subtree; chirality data of the two children is flipped.
  void swap_children(NodeId inner);

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId n) const { return nodes_[n]; }
  bool is_leaf(NodeId n) const { return nodes_[n].left == no_node; }
  bool is_inner(NodeId n) const { return !is_leaf(n); }
  NodeId parent(NodeId n) const { return nodes_[n].parent; }
  NodeId left(NodeId n) const { return nodes_[n].left; }
  NodeId right(NodeId n) const { return nodes_[n].right; }
  NodeId child(NodeId n, Chirality c) const { return c == Chirality::left ? left(n) : right(n); }
  Chirality chirality(NodeId n) const { return nodes_[n].chirality; }

  std::size_t leaf_count() const;
  std::size_t inner_count() const;
  std::size_t depth(NodeId n) const;
  std::size_t height() const;  // max depth

  std::vector<NodeId> preorder() const;
  // Left subtree, node, right subtree.
  std::vector<NodeId> inorder() const;
  std::vector<NodeId> preorder(NodeId from) const;

  // The root of a tree returned by subtree() may have chirality R.
  void set_root_chirality(Chirality c) { nodes_[0].chirality = c; }

  // Structure checks: parent/child links consistent, full binary, children
  // chirality matches their slot. Returns a message for the first problem.
  std::optional<std::string> check() const;

 private:
  std::vector<Node> nodes_;
};

// Chiralities along the root-to-node path, padded with '_' up to height+1.
std::string path_word(const MergeTree& t, NodeId n);
std::vector<Chirality> chirality_path(const MergeTree& t, NodeId n);
// The node with a given path word (blanks optional). nullopt if absent.
std::optional<NodeId> node_at(const MergeTree& t, std::string_view word);

NodeId youngest_common_ancestor(const MergeTree& t, NodeId a, NodeId b);
bool is_ancestor_or_self(const MergeTree& t, NodeId ancestor, NodeId n);

// Copy of the subtree rooted at n with fresh node ids.
// `mapping`, if given, receives the original id of each new node.
MergeTree subtree(const MergeTree& t, NodeId n, std::vector<NodeId>* mapping = nullptr);
// Proper descendants, ascending by id.
std::vector<NodeId> descendants(const MergeTree& t, NodeId n);
// Proper ancestors, parent first.
std::vector<NodeId> ancestors(const MergeTree& t, NodeId n);

// The unique root- and chirality-preserving bijection, as map[node of a] =
// node of b, or nullopt if the trees are not isomorphic.
std::optional<std::vector<NodeId>> tree_isomorphism(const MergeTree& a, const MergeTree& b);
bool isomorphic(const MergeTree& a, const MergeTree& b);

// Text format. Unlabeled: leaf "*", inner "(<left>,<right>)". Labeled: leaf
// "<value>", inner "(<left>,<right>):<value>". Left child first.
std::string to_text(const MergeTree& t);
std::string to_text(const MergeTree& t, const std::vector<Rational>& labels);

struct ParsedTree {
  MergeTree tree;
  std::optional<std::vector<Rational>> labels;  // all nodes labeled, or none
};
// Throws InputError with the position of the problem. Whitespace and '#'
// comments are ignored.
ParsedTree parse_merge_tree(std::string_view text);

// Graphviz output with parents drawn below children; edges carry L/R.
std::string to_dot(const MergeTree& t, const std::vector<Rational>* labels = nullptr,
                   std::string_view name = "merge_tree");

}  // namespace morsetree
