#include "morsetree/curry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "morsetree/equiv.hpp"
#include "morsetree/error.hpp"
#include "morsetree/realize.hpp"
#include "text.hpp"

namespace morsetree {

CMlTree induced_cml_tree(const PathFunction& f) {
  if (!validate(f.as_dmf()).all_critical())
    throw UnsupportedRegime("induced_cml_tree needs a function without matched cells");
  const auto& v = f.values;
  auto top = [&](std::size_t lo, std::size_t hi) {
    std::size_t best = lo;
    for (std::size_t j = lo; j <= hi; ++j)
      if (v[j] > v[best]) best = j;
    return best;
  };
  CMlTree out;
  std::size_t root_pos = top(0, v.size() - 1);
  out.labels.push_back(v[root_pos]);
  struct Task {
    NodeId node;
    std::size_t lo, hi, edge;
  };
  std::vector<Task> todo;
  if (v.size() > 1) todo.push_back({out.tree.root(), 0, v.size() - 1, root_pos});
  while (!todo.empty()) {
    Task task = todo.back();
    todo.pop_back();
    if (task.edge % 2 == 0) throw std::logic_error("maximum of a component is on a vertex");
    const Rational& level = v[task.edge];
    std::size_t left_lo = task.edge - 1;
    while (left_lo > task.lo && v[left_lo - 1] < level) --left_lo;
    std::size_t right_hi = task.edge + 1;
    while (right_hi < task.hi && v[right_hi + 1] < level) ++right_hi;
    auto [l, r] = out.tree.split(task.node);
    out.labels.resize(out.tree.size());
    std::size_t lt = top(left_lo, task.edge - 1), rt = top(task.edge + 1, right_hi);
    out.labels[l] = v[lt];
    out.labels[r] = v[rt];
    if (right_hi > task.edge + 1) todo.push_back({r, task.edge + 1, right_hi, rt});
    if (left_lo < task.edge - 1) todo.push_back({l, left_lo, task.edge - 1, lt});
  }
  return out;
}

CMlTree reflect_subtree(const CMlTree& t, NodeId node) {
  CMlTree out = t;
  for (NodeId n : t.tree.preorder(node))
    if (out.tree.is_inner(n)) out.tree.swap_children(n);
  return out;
}

std::optional<NodeId> node_with_label(const MergeTree& t, const Labeling& labels, const Rational& label) {
  for (NodeId n = 0; n < t.size(); ++n)
    if (labels[n] == label) return n;
  return std::nullopt;
}

std::optional<std::vector<NodeId>> reflection_sequence(const CMlTree& from, const CMlTree& to) {
  if (from.tree.size() != to.tree.size()) return std::nullopt;
  CMlTree cur = from;
  std::vector<NodeId> steps;
  std::vector<std::pair<NodeId, NodeId>> todo{{cur.tree.root(), to.tree.root()}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    if (cur.labels[a] != to.labels[b] || cur.tree.is_leaf(a) != to.tree.is_leaf(b)) return std::nullopt;
    if (cur.tree.is_leaf(a)) continue;
    if (cur.labels[cur.tree.left(a)] != to.labels[to.tree.left(b)]) {
      cur = reflect_subtree(cur, a);
      steps.push_back(a);
    }
    todo.emplace_back(cur.tree.left(a), to.tree.left(b));
    todo.emplace_back(cur.tree.right(a), to.tree.right(b));
  }
  return steps;
}

MlTree js_quotient(const CMlTree& t) {
  MlTree out{t.tree, t.labels};
  std::vector<Rational> low = t.labels;
  auto post = t.tree.preorder();
  std::reverse(post.begin(), post.end());
  for (NodeId n : post)
    if (t.tree.is_inner(n)) low[n] = std::min({low[n], low[t.tree.left(n)], low[t.tree.right(n)]});
  for (NodeId n : out.tree.preorder()) {
    if (out.tree.is_leaf(n)) continue;
    Chirality c = out.tree.chirality(n);
    NodeId same = out.tree.child(n, c), other = out.tree.child(n, opposite(c));
    if (low[other] < low[same]) out.tree.swap_children(n);
  }
  return out;
}

PathFunction o_js(const PathFunction& f) {
  PathFunction g = induced_dmf(induced_ml_tree(f));
  return PathFunction(f.path, std::move(g.values));
}

void check_pl(const PLFunction& pl) {
  const auto& b = pl.breakpoints;
  if (b.empty()) throw std::invalid_argument("no breakpoints");
  if (b.size() % 2 == 0) throw std::invalid_argument("a PL function needs an odd number of breakpoints");
  if (b.front().first != 0) throw std::invalid_argument("first breakpoint must be at position 0");
  if (b.size() > 1 && b.back().first != 1) throw std::invalid_argument("last breakpoint must be at position 1");
  std::set<Rational> seen;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (j > 0 && !(b[j - 1].first < b[j].first))
      throw std::invalid_argument("positions must increase strictly");
    if (!seen.insert(b[j].second).second)
      throw std::invalid_argument("value " + to_string(b[j].second) + " repeats");
    if (j % 2 == 1 && !(b[j].second > b[j - 1].second && b[j].second > b[j + 1].second))
      throw std::invalid_argument("breakpoint " + std::to_string(j) + " is not a local maximum");
  }
}

PLFunction dmf_to_pl(const PathFunction& f) {
  if (!validate(f.as_dmf()).all_critical())
    throw UnsupportedRegime("dmf_to_pl needs a function without matched cells");
  PLFunction pl;
  const std::size_t k = f.path.edge_count();
  if (k == 0) {
    pl.breakpoints.emplace_back(Rational(0), f.values[0]);
    return pl;
  }
  for (std::size_t j = 0; j < f.values.size(); ++j)
    pl.breakpoints.emplace_back(Rational(static_cast<long long>(j), static_cast<long long>(2 * k)),
                                f.values[j]);
  return pl;
}

PathFunction pl_to_dmf(const PLFunction& pl) {
  check_pl(pl);
  std::vector<Rational> values;
  for (const auto& [pos, value] : pl.breakpoints) values.push_back(value);
  return PathFunction(std::move(values));
}

PLFunction parse_pl(std::string_view text) {
  PLFunction pl;
  for (const auto& line : detail::tokenize_lines(text)) {
    if (line.size() != 2)
      throw InputError("expected '<position> <value>'", line.front().line, line.front().column);
    pl.breakpoints.emplace_back(detail::rational_token(line[0]), detail::rational_token(line[1]));
  }
  try {
    check_pl(pl);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return pl;
}

std::string format_pl(const PLFunction& pl) {
  std::string out;
  for (const auto& [pos, value] : pl.breakpoints)
    out += numerator(pos).str() + "/" + denominator(pos).str() + " " + to_string(value) + "\n";
  return out;
}

}  // namespace morsetree
