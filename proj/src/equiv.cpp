#include "morsetree/equiv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "morsetree/error.hpp"

namespace morsetree {
namespace {

// Labels paired through the tree isomorphism must be increasing together.
bool increasing_pairs(std::vector<std::pair<Rational, Rational>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const auto& [c, d] = pairs[i + 1];
    if (a == c ? b != d : !(b < d)) return false;
  }
  return true;
}

void require_all_critical(const DiscreteMorseFunction& f, const char* what) {
  if (!validate(f).all_critical())
    throw UnsupportedRegime(std::string(what) + " needs a function without matched cells");
}

// The induced Ml tree has one node per critical simplex, so it also tells
// whether f is all-critical.
MlTree all_critical_tree(const DiscreteMorseFunction& f, const char* what) {
  InducedTree it = induce(f);
  if (it.ml.tree.size() != f.complex().simplex_count())
    throw UnsupportedRegime(std::string(what) + " needs a function without matched cells");
  return std::move(it.ml);
}

}  // namespace

bool labeled_isomorphic(const MergeTree& a, const Labeling& la, const MergeTree& b,
                        const Labeling& lb, LabelMatch match) {
  auto map = tree_isomorphism(a, b);
  if (!map) return false;
  std::vector<std::pair<Rational, Rational>> pairs;
  for (NodeId n = 0; n < a.size(); ++n) {
    if (match == LabelMatch::exact && !equal(la[n], lb[(*map)[n]])) return false;
    pairs.emplace_back(la[n], lb[(*map)[n]]);
  }
  return match == LabelMatch::exact || increasing_pairs(std::move(pairs));
}

bool ml_isomorphic(const MlTree& a, const MlTree& b, LabelMatch match) {
  return labeled_isomorphic(a.tree, a.labels, b.tree, b.labels, match);
}

bool ml_shuffle_equivalent(const MlTree& a, const MlTree& b) {
  auto map = tree_isomorphism(a.tree, b.tree);
  if (!map) return false;
  std::vector<std::pair<Rational, Rational>> leaves, inner;
  for (NodeId n = 0; n < a.tree.size(); ++n)
    (a.tree.is_leaf(n) ? leaves : inner).emplace_back(a.labels[n], b.labels[(*map)[n]]);
  return increasing_pairs(std::move(leaves)) && increasing_pairs(std::move(inner));
}

bool mo_isomorphic(const MergeTree& a, const MorseOrder& oa, const MergeTree& b, const MorseOrder& ob) {
  auto map = tree_isomorphism(a, b);
  if (!map || oa.size() != a.size() || ob.size() != b.size()) return false;
  for (std::size_t i = 0; i < oa.size(); ++i)
    if ((*map)[oa[i]] != ob[i]) return false;
  return true;
}

std::string EquivalenceWitness::describe() const {
  std::ostringstream out;
  const char* names[] = {"shuffle", "symmetry", "cm"};
  out << "witness: " << names[static_cast<int>(kind)] << (complete ? "" : " (incomplete)") << '\n';
  if (!simplex_map.empty()) {
    out << "simplex map:";
    for (std::size_t s = 0; s < simplex_map.size(); ++s) out << ' ' << s << "->" << simplex_map[s];
    out << '\n';
  }
  auto pairs = [&](const char* title, const std::vector<std::pair<Rational, Rational>>& v) {
    if (v.empty()) return;
    out << title << ':';
    for (const auto& [a, b] : v) out << ' ' << to_string(a) << "->" << to_string(b);
    out << '\n';
  };
  pairs("critical vertex values", vertex_values);
  pairs("critical edge values", edge_values);
  auto reductions = [&](const char* title, const std::vector<Reattachment>& v) {
    for (const auto& r : v)
      out << title << ": level " << to_string(r.level) << " edge {" << r.kept << "," << r.detached
          << "} -> {" << r.kept << "," << r.attached << "}\n";
  };
  reductions("reattach first", first_reduction);
  reductions("reattach second", second_reduction);
  for (const auto& r : reflections)
    out << "reflect level " << to_string(r.level) << " positions " << r.first << ".." << r.last << '\n';
  return out.str();
}

// ---- shuffle

namespace {

// Checks that g restricted to the listed simplices orders them like f does.
bool same_order(const std::vector<SimplexId>& cells, const std::vector<Rational>& f,
                const std::vector<Rational>& g, const std::vector<SimplexId>& map,
                std::vector<std::pair<Rational, Rational>>& out) {
  std::vector<SimplexId> sorted = cells;
  std::sort(sorted.begin(), sorted.end(), [&](SimplexId a, SimplexId b) { return less(f[a], f[b]); });
  for (SimplexId s : sorted) out.emplace_back(f[s], g[map[s]]);
  return increasing_pairs(out);
}

// f and g given as per-simplex values on one complex, with map from f's
// simplices to g's.
EquivalenceResult shuffle_core(const SimplicialTree& t, const DiscreteMorseFunction& f,
                               const DiscreteMorseFunction& g, const std::vector<SimplexId>& map) {
  CriticalData df = validate(f), dg = validate(g);
  EquivalenceResult result;
  std::vector<SimplexId> vertices, edges;
  for (SimplexId s = 0; s < t.simplex_count(); ++s) {
    if (df.is_critical(s) != dg.is_critical(map[s])) return result;
    if (!df.is_critical(s)) continue;
    (t.is_vertex(s) ? vertices : edges).push_back(s);
  }
  EquivalenceWitness w;
  w.kind = WitnessKind::shuffle;
  w.simplex_map = map;
  if (!same_order(vertices, f.values(), g.values(), map, w.vertex_values)) return result;
  if (!same_order(edges, f.values(), g.values(), map, w.edge_values)) return result;
  result.equivalent = true;
  result.witness = std::move(w);
  return result;
}

}  // namespace

EquivalenceResult shuffle_equivalent(const DiscreteMorseFunction& f, const DiscreteMorseFunction& g) {
  if (!(f.complex() == g.complex()))
    throw std::invalid_argument("shuffle_equivalent needs both functions on the same complex");
  std::vector<SimplexId> id(f.complex().simplex_count());
  std::iota(id.begin(), id.end(), SimplexId{0});
  return shuffle_core(f.complex(), f, g, id);
}

EquivalenceResult shuffle_equivalent(const PathFunction& f, const PathFunction& g, PathMatching matching) {
  if (f.values.size() != g.values.size()) {
    validate(f.as_dmf());
    validate(g.as_dmf());
    return {};
  }
  // compare positionally on the standard path
  PathFunction a(f.values), b(g.values);
  DiscreteMorseFunction fa = a.as_dmf(), gb = b.as_dmf();
  const SimplicialTree& t = fa.complex();
  auto order = a.path.simplex_sequence();  // position -> simplex
  std::vector<SimplexId> forward(t.simplex_count());
  std::iota(forward.begin(), forward.end(), SimplexId{0});
  EquivalenceResult r = shuffle_core(t, fa, gb, forward);
  if (r || matching == PathMatching::identity) return r;
  std::vector<SimplexId> backward(t.simplex_count());
  for (std::size_t j = 0; j < order.size(); ++j) backward[order[j]] = order[order.size() - 1 - j];
  return shuffle_core(t, fa, gb, backward);
}

// ---- symmetry

std::vector<Reflection> generator_reflections(const PathFunction& f) {
  std::vector<Rational> levels = f.values;
  std::sort(levels.begin(), levels.end(), RationalLess{});
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Reflection> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const std::size_t n = f.values.size();
  for (const Rational& c : levels) {
    std::size_t j = 0;
    while (j < n) {
      if (!(f.values[j] <= c)) {
        ++j;
        continue;
      }
      std::size_t start = j;
      while (j < n && f.values[j] <= c) ++j;
      std::size_t last = j - 1;
      if (last > start && seen.emplace(start, last).second) out.push_back({c, start, last});
    }
  }
  return out;
}

PathFunction apply_reflection(const PathFunction& f, const Reflection& r) {
  if (r.last >= f.values.size() || r.first > r.last || (r.last - r.first) % 2 != 0)
    throw std::invalid_argument("reflection range does not fit the path");
  PathFunction g = f;
  std::reverse(g.values.begin() + static_cast<std::ptrdiff_t>(r.first),
               g.values.begin() + static_cast<std::ptrdiff_t>(r.last + 1));
  return g;
}

namespace {

// Orbit search on ranks: the functions involved are injective and
// reflections only permute values, so rank vectors identify them.
using Ranks = std::vector<int>;

struct OrbitSearch {
  std::vector<Rational> sorted;  // value of each rank
  std::map<Ranks, std::pair<Ranks, Reflection>> parent;
  bool truncated = false;

  Ranks ranks_of(const std::vector<Rational>& values) const {
    Ranks r(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i], RationalLess{}) - sorted.begin());
    return r;
  }
  std::vector<Rational> values_of(const Ranks& r) const {
    std::vector<Rational> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = sorted[static_cast<std::size_t>(r[i])];
    return v;
  }
};

// Same runs as generator_reflections(), levels given as ranks.
std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> rank_reflections(const Ranks& r) {
  std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  const std::size_t n = r.size();
  for (int c = 0; c < static_cast<int>(n); ++c) {
    for (std::size_t j = 0; j < n;) {
      if (r[j] > c) {
        ++j;
        continue;
      }
      std::size_t first = j;
      while (j < n && r[j] <= c) ++j;
      if (j - 1 > first && seen.emplace(first, j - 1).second) out.push_back({c, {first, j - 1}});
    }
  }
  return out;
}

// An injective path function is a dMf iff every edge exceeds both endpoints.
bool injective_path_is_morse(const Ranks& r) {
  for (std::size_t e = 1; e < r.size(); e += 2)
    if (r[e] < r[e - 1] || r[e] < r[e + 1]) return false;
  return true;
}

// Breadth-first expansion; stops early when `target` is reached.
OrbitSearch explore(const PathFunction& f, std::size_t limit, const std::vector<Rational>* target) {
  OrbitSearch s;
  s.sorted = f.values;
  std::sort(s.sorted.begin(), s.sorted.end(), RationalLess{});
  const Ranks start = s.ranks_of(f.values);
  std::optional<Ranks> goal;
  if (target) goal = s.ranks_of(*target);
  s.parent.emplace(start, std::make_pair(start, Reflection{}));
  std::vector<Ranks> frontier{start};
  while (!frontier.empty()) {
    std::vector<Ranks> next;
    for (const Ranks& r : frontier) {
      if (goal && r == *goal) return s;
      for (const auto& [level, run] : rank_reflections(r)) {
        Ranks g = r;
        std::reverse(g.begin() + static_cast<std::ptrdiff_t>(run.first),
                     g.begin() + static_cast<std::ptrdiff_t>(run.second + 1));
        if (s.parent.count(g)) continue;
        if (!injective_path_is_morse(g))
          throw std::logic_error("reflection produced an invalid function: " +
                                 format_path_function(PathFunction(f.path, s.values_of(g))));
        if (s.parent.size() >= limit) {
          s.truncated = true;
          return s;
        }
        s.parent.emplace(g, std::make_pair(r, Reflection{s.sorted[static_cast<std::size_t>(level)],
                                                         run.first, run.second}));
        next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }
  return s;
}

}  // namespace

std::vector<PathFunction> sublevel_orbit(const PathFunction& f, std::size_t limit) {
  require_all_critical(f.as_dmf(), "sublevel_orbit");
  OrbitSearch s = explore(f, limit, nullptr);
  if (s.truncated) throw std::length_error("orbit exceeds the size limit");
  std::vector<PathFunction> out;
  for (const auto& entry : s.parent) out.emplace_back(f.path, s.values_of(entry.first));
  std::sort(out.begin(), out.end(), [](const PathFunction& a, const PathFunction& b) { return a.values < b.values; });
  return out;
}

EquivalenceResult symmetry_equivalent(const PathFunction& f, const PathFunction& g, bool want_witness,
                                      std::size_t search_limit) {
  MlTree tf = all_critical_tree(f.as_dmf(), "symmetry_equivalent");
  MlTree tg = all_critical_tree(g.as_dmf(), "symmetry_equivalent");
  EquivalenceResult result;
  if (f.values.size() != g.values.size()) return result;
  result.equivalent = ml_isomorphic(tf, tg, LabelMatch::exact);
  if (!result.equivalent || !want_witness) return result;
  EquivalenceWitness w;
  w.kind = WitnessKind::symmetry;
  OrbitSearch s = explore(PathFunction(f.path, f.values), search_limit, &g.values);
  const Ranks from = s.ranks_of(f.values), to = s.ranks_of(g.values);
  if (!s.parent.count(to)) {
    w.complete = false;
  } else {
    for (Ranks cur = to; cur != from;) {
      const auto& [prev, r] = s.parent.at(cur);
      w.reflections.push_back(r);
      cur = prev;
    }
    std::reverse(w.reflections.begin(), w.reflections.end());
  }
  result.witness = std::move(w);
  return result;
}

// ---- cm

PathFunction cm_to_path(const DiscreteMorseFunction& f, std::vector<Reattachment>* log) {
  require_all_critical(f, "cm_to_path");
  const SimplicialTree& t = f.complex();
  std::map<VertexId, Rational> vertex_value;
  for (SimplexId v = 0; v < t.vertex_count(); ++v) vertex_value[t.vertex_id(v)] = f.value(v);
  struct WorkEdge {
    VertexId a, b;
    Rational value;
  };
  std::vector<WorkEdge> edges;
  for (SimplexId e = t.vertex_count(); e < t.simplex_count(); ++e)
    edges.push_back({t.edge(e).a, t.edge(e).b, f.value(e)});
  std::sort(edges.begin(), edges.end(), [](const WorkEdge& x, const WorkEdge& y) { return less(x.value, y.value); });

  // edges[0..k) are the ones below the current level, since values ascend
  auto degree_below = [&](std::size_t k, VertexId v) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < k; ++i) d += (edges[i].a == v) + (edges[i].b == v);
    return d;
  };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    for (int side = 0; side < 2; ++side) {
      VertexId x = side == 0 ? edges[k].a : edges[k].b;
      if (degree_below(k, x) + 1 <= 2) continue;
      // the path component of x strictly below this edge
      std::set<VertexId> comp{x};
      std::vector<VertexId> stack{x};
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < k; ++i) {
          VertexId w = edges[i].a == v ? edges[i].b : edges[i].b == v ? edges[i].a : v;
          if (w != v && comp.insert(w).second) stack.push_back(w);
        }
      }
      VertexId target = x;
      for (VertexId v : comp)
        if (degree_below(k, v) == 1) {
          target = v;
          break;
        }
      if (target == x) throw std::logic_error("component below a merging edge has no endpoint");
      VertexId kept = side == 0 ? edges[k].b : edges[k].a;
      if (log) log->push_back({edges[k].value, kept, x, target});
      (side == 0 ? edges[k].a : edges[k].b) = target;
    }
  }
  std::vector<VertexId> vertices(t.vertices());
  std::vector<Edge> result_edges;
  std::vector<Rational> values;
  for (const auto& e : edges) result_edges.push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
  SimplicialTree tree(vertices, result_edges);
  for (SimplexId v = 0; v < tree.vertex_count(); ++v) values.push_back(vertex_value[tree.vertex_id(v)]);
  for (SimplexId e = tree.vertex_count(); e < tree.simplex_count(); ++e) {
    const Edge& te = tree.edge(e);
    for (const auto& w : edges)
      if (std::min(w.a, w.b) == te.a && std::max(w.a, w.b) == te.b) values.push_back(w.value);
  }
  auto path = as_path_function(DiscreteMorseFunction(tree, values));
  if (!path) throw std::logic_error("reduction did not produce a path");
  return *path;
}

EquivalenceResult cm_equivalent(const DiscreteMorseFunction& f, const DiscreteMorseFunction& g,
                                bool want_witness) {
  MlTree tf = all_critical_tree(f, "cm_equivalent");
  MlTree tg = all_critical_tree(g, "cm_equivalent");
  EquivalenceResult result;
  result.equivalent = ml_isomorphic(tf, tg, LabelMatch::exact);
  if (!result.equivalent || !want_witness) return result;
  EquivalenceWitness w;
  w.kind = WitnessKind::cm;
  PathFunction pf = cm_to_path(f, &w.first_reduction);
  PathFunction pg = cm_to_path(g, &w.second_reduction);
  auto sym = symmetry_equivalent(PathFunction(pf.values), PathFunction(pg.values), true);
  if (sym.witness) {
    w.reflections = sym.witness->reflections;
    w.complete = sym.witness->complete;
  }
  result.witness = std::move(w);
  return result;
}

}  // namespace morsetree
