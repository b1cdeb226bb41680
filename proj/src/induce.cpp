#include "morsetree/induce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace morsetree {
namespace {

using Mask = std::vector<bool>;

// Dense ranks of the values (equal values share a rank), so the traversal
// compares machine integers instead of rationals.
std::vector<std::size_t> value_ranks(const DiscreteMorseFunction& f) {
  const std::size_t n = f.values().size();
  std::vector<std::size_t> idx(n), rank(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return less(f.value(a), f.value(b)); });
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i > 0 && less(f.value(idx[i - 1]), f.value(idx[i]))) ++r;
    rank[idx[i]] = r;
  }
  return rank;
}

Mask component_in(const SimplicialTree& t, const Mask& allowed, SimplexId vertex) {
  Mask in(t.simplex_count(), false);
  std::vector<SimplexId> stack{vertex};
  in[vertex] = true;
  while (!stack.empty()) {
    SimplexId v = stack.back();
    stack.pop_back();
    for (SimplexId e : t.cofaces(v)) {
      if (!allowed[e] || in[e]) continue;
      in[e] = true;
      for (SimplexId w : t.faces(e))
        if (!in[w]) {
          in[w] = true;
          stack.push_back(w);
        }
    }
  }
  return in;
}

struct Side {
  Mask members;
  SimplexId top = 0;   // critical simplex of largest value
  SimplexId bottom = 0;  // simplex of smallest value
  bool has_critical_edge = false;
};

Side describe_side(const SimplicialTree& t, const std::vector<std::size_t>& f, const CriticalData& d,
                   Mask members) {
  Side s;
  bool have_top = false, have_bottom = false;
  for (SimplexId x = 0; x < t.simplex_count(); ++x) {
    if (!members[x]) continue;
    if (!have_bottom || f[x] < f[s.bottom]) {
      s.bottom = x;
      have_bottom = true;
    }
    if (!d.is_critical(x)) continue;
    if (t.is_edge(x)) s.has_critical_edge = true;
    if (!have_top || f[x] > f[s.top]) {
      s.top = x;
      have_top = true;
    }
  }
  s.members = std::move(members);
  return s;
}

}  // namespace

InducedTree induce(const DiscreteMorseFunction& f) {
  CriticalData d = validate(f);
  const SimplicialTree& t = f.complex();
  const std::vector<std::size_t> rank = value_ranks(f);
  InducedTree out;
  MergeTree& tree = out.ml.tree;
  Labeling& labels = out.ml.labels;

  Side whole = describe_side(t, rank, d, Mask(t.simplex_count(), true));
  labels.push_back(f.value(whole.top));
  out.simplex_of_node.push_back(whole.top);
  if (!whole.has_critical_edge) {
    out.single_leaf = true;
    return out;
  }
  if (!t.is_edge(whole.top))
    throw std::logic_error("maximum critical value is not on an edge");

  struct Task {
    NodeId node;
    Mask members;
    SimplexId edge;
  };
  std::vector<Task> todo;
  todo.push_back({tree.root(), std::move(whole.members), whole.top});
  while (!todo.empty()) {
    Task task = std::move(todo.back());
    todo.pop_back();
    const std::size_t level = rank[task.edge];
    Mask below(t.simplex_count(), false);
    for (SimplexId x = 0; x < t.simplex_count(); ++x)
      below[x] = task.members[x] && rank[x] < level;
    const auto& ends = t.faces(task.edge);
    Side a = describe_side(t, rank, d, component_in(t, below, ends[0]));
    Side b = describe_side(t, rank, d, component_in(t, below, ends[1]));
    if (rank[a.bottom] == rank[b.bottom])
      throw std::logic_error("two sides of " + t.simplex_name(task.edge) + " share their minimum");
    Side& elder = rank[a.bottom] < rank[b.bottom] ? a : b;
    Side& younger = &elder == &a ? b : a;
    Chirality keep = tree.chirality(task.node);
    auto [l, r] = tree.split(task.node, keep);
    NodeId elder_node = keep == Chirality::left ? l : r;
    NodeId younger_node = keep == Chirality::left ? r : l;
    labels.resize(tree.size());
    out.simplex_of_node.resize(tree.size());
    for (auto [side, node] : {std::pair<Side*, NodeId>{&elder, elder_node}, {&younger, younger_node}}) {
      labels[node] = f.value(side->top);
      out.simplex_of_node[node] = side->top;
      if (!side->has_critical_edge) continue;
      if (!t.is_edge(side->top))
        throw std::logic_error("maximum critical value below " + t.simplex_name(task.edge) +
                               " is not on an edge");
      todo.push_back({node, std::move(side->members), side->top});
    }
  }
  return out;
}

MlTree induced_ml_tree(const DiscreteMorseFunction& f) { return induce(f).ml; }
MlTree induced_ml_tree(const PathFunction& f) { return induce(f.as_dmf()).ml; }
MergeTree induced_merge_tree(const DiscreteMorseFunction& f) { return induce(f).ml.tree; }
MergeTree induced_merge_tree(const PathFunction& f) { return induce(f.as_dmf()).ml.tree; }

}  // namespace morsetree
