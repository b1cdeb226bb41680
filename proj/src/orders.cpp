#include "morsetree/orders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace morsetree {
namespace {

// At every node: the subtree of the child sharing the node's chirality, then
// the other child's subtree, then the node.
void twisted_postorder(const MergeTree& t, NodeId n, std::vector<NodeId>& out) {
  if (t.is_inner(n)) {
    Chirality c = t.chirality(n);
    twisted_postorder(t, t.child(n, c), out);
    twisted_postorder(t, t.child(n, opposite(c)), out);
  }
  out.push_back(n);
}

std::vector<std::size_t> ranks_of(const MergeTree& t, const MorseOrder& order) {
  if (order.size() != t.size()) throw std::invalid_argument("order must list every node once");
  std::vector<std::size_t> rank(t.size(), t.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= t.size() || rank[order[i]] != t.size())
      throw std::invalid_argument("order must list every node once");
    rank[order[i]] = i;
  }
  return rank;
}

bool valid_permutation(const MergeTree& t, const MorseOrder& order) {
  try {
    ranks_of(t, order);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool check_order(const MergeTree& t, const MorseOrder& order, bool chirality_rule) {
  if (!valid_permutation(t, order)) return false;
  auto rank = ranks_of(t, order);
  std::vector<std::size_t> lo(t.size()), hi(t.size());
  auto post = t.preorder();
  std::reverse(post.begin(), post.end());
  for (NodeId n : post) {
    lo[n] = hi[n] = rank[n];
    if (t.is_leaf(n)) continue;
    NodeId a = t.left(n), b = t.right(n);
    hi[n] = std::max({rank[n], hi[a], hi[b]});
    lo[n] = std::min({rank[n], lo[a], lo[b]});
    if (hi[n] != rank[n]) return false;
    if (chirality_rule) {
      NodeId same = t.child(n, t.chirality(n));
      NodeId other = t.child(n, opposite(t.chirality(n)));
      if (lo[same] > lo[other]) return false;
    }
  }
  return true;
}

}  // namespace

MorseOrder sublevel_connected_morse_order(const MergeTree& t) {
  MorseOrder out;
  out.reserve(t.size());
  twisted_postorder(t, t.root(), out);
  return out;
}

MorseOrder index_morse_order(const MergeTree& t) {
  MorseOrder sc = sublevel_connected_morse_order(t);
  MorseOrder out;
  out.reserve(sc.size());
  std::copy_if(sc.begin(), sc.end(), std::back_inserter(out), [&](NodeId n) { return t.is_leaf(n); });
  std::copy_if(sc.begin(), sc.end(), std::back_inserter(out), [&](NodeId n) { return t.is_inner(n); });
  return out;
}

bool is_morse_order(const MergeTree& t, const MorseOrder& order) { return check_order(t, order, true); }

bool is_curry_morse_order(const MergeTree& t, const MorseOrder& order) {
  return check_order(t, order, false);
}

bool is_morse_labeling(const MergeTree& t, const Labeling& labeling) {
  try {
    return is_morse_order(t, order_from_labeling(t, labeling));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool is_curry_morse_labeling(const MergeTree& t, const Labeling& labeling) {
  try {
    return is_curry_morse_order(t, order_from_labeling(t, labeling));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Labeling labeling_from_order(const MergeTree& t, const MorseOrder& order) {
  auto rank = ranks_of(t, order);
  Labeling out;
  out.reserve(rank.size());
  for (std::size_t r : rank) out.emplace_back(static_cast<long long>(r));
  return out;
}

MorseOrder order_from_labeling(const MergeTree& t, const Labeling& labeling) {
  if (labeling.size() != t.size()) throw std::invalid_argument("one label per node expected");
  MorseOrder order(t.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return less(labeling[a], labeling[b]); });
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (labeling[order[i]] == labeling[order[i + 1]])
      throw std::invalid_argument("labeling is not injective: " + to_string(labeling[order[i]]) +
                                  " appears twice");
  return order;
}

Labeling rank_labeling(const MergeTree& t, const Labeling& labeling) {
  return labeling_from_order(t, order_from_labeling(t, labeling));
}

std::vector<NodeId> simplex_order_tree(const MergeTree& t) { return t.inorder(); }

std::vector<SimplexId> simplex_order_path(const OrientedPath& p) { return p.simplex_sequence(); }

std::vector<NodeId> order_isomorphism(const OrientedPath& p, const MergeTree& t, Orientation orientation) {
  if (p.edge_count() != t.inner_count())
    throw std::invalid_argument("path has " + std::to_string(p.edge_count()) +
                                " edges but the tree has " + std::to_string(t.inner_count()) +
                                " inner nodes");
  auto nodes = simplex_order_tree(t);
  if (orientation == Orientation::mirrored) std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

std::string format_order(const MergeTree& t, const MorseOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ' ';
    out += path_word(t, order[i]);
  }
  return out;
}

}  // namespace morsetree
