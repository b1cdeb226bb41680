#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morsetree/complex.hpp"
#include "morsetree/dmf.hpp"
#include "morsetree/merge_tree.hpp"
#include "morsetree/orders.hpp"

namespace morsetree {

// All merge trees with n leaves, one per isomorphism class, in a fixed order.
std::vector<MergeTree> enumerate_merge_trees(std::size_t n_leaves);

// Every assignment of 0..2n-2 to the simplices of the standard n-vertex path
// that is a discrete Morse function, in lexicographic order of values.
std::vector<PathFunction> enumerate_crit_dmfs(std::size_t n_vertices);

// One tree per isomorphism class of trees with n vertices.
std::vector<SimplicialTree> enumerate_tree_shapes(std::size_t n_vertices);

// All-critical functions with values 0..2n-2 on the given tree.
std::vector<DiscreteMorseFunction> enumerate_crit_dmfs(const SimplicialTree& tree);

// Literal comparators, kept independent of the library's traversal-based
// orders so the two can be checked against each other.
// Path-word order: true iff a comes before b (leaf/inner split optional).
bool path_word_less(const MergeTree& t, NodeId a, NodeId b, bool split_leaves);
// Simplex order on nodes through the youngest common ancestor.
bool simplex_order_less(const MergeTree& t, NodeId a, NodeId b);

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // first few failures
};

struct EnumerationReport {
  std::size_t max_leaves = 0;
  std::size_t max_vertices = 0;
  std::vector<std::pair<std::string, std::size_t>> counts;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string format(bool color = false) const;
};

struct VerifyOptions {
  std::size_t max_leaves = 7;
  std::size_t max_vertices = 5;
  // Largest tree (in vertices) for the cm reduction checks on non-path trees.
  std::size_t max_tree_vertices = 5;
  // Fault injection: mirror the induced Ml tree of the k-th enumerated path
  // function (counting over all sizes) before it is checked.
  std::optional<std::size_t> corrupt_induced_tree;
};

EnumerationReport verify_theorems(const VerifyOptions& options = {});

}  // namespace morsetree
