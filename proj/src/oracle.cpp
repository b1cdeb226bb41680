#include "morsetree/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "morsetree/curry.hpp"
#include "morsetree/equiv.hpp"
#include "morsetree/induce.hpp"
#include "morsetree/realize.hpp"

namespace morsetree {

std::vector<MergeTree> enumerate_merge_trees(std::size_t n_leaves) {
  if (n_leaves == 0) throw std::invalid_argument("a merge tree has at least one leaf");
  std::vector<std::vector<std::string>> shapes(n_leaves + 1);
  shapes[1] = {"*"};
  for (std::size_t n = 2; n <= n_leaves; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (const auto& a : shapes[k])
        for (const auto& b : shapes[n - k]) shapes[n].push_back("(" + a + "," + b + ")");
  std::vector<MergeTree> out;
  for (const auto& s : shapes[n_leaves]) out.push_back(parse_merge_tree(s).tree);
  return out;
}

std::vector<DiscreteMorseFunction> enumerate_crit_dmfs(const SimplicialTree& tree) {
  std::vector<long long> perm(tree.simplex_count());
  std::iota(perm.begin(), perm.end(), 0LL);
  std::vector<DiscreteMorseFunction> out;
  do {
    std::vector<Rational> values(perm.begin(), perm.end());
    DiscreteMorseFunction f(tree, std::move(values));
    if (!find_violation(f)) out.push_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<PathFunction> enumerate_crit_dmfs(std::size_t n_vertices) {
  if (n_vertices == 0) throw std::invalid_argument("a path has at least one vertex");
  OrientedPath path = OrientedPath::standard(n_vertices);
  SimplicialTree tree = path.tree();
  auto order = path.simplex_sequence();
  std::vector<long long> perm(path.simplex_count());
  std::iota(perm.begin(), perm.end(), 0LL);
  std::vector<PathFunction> out;
  do {
    std::vector<Rational> by_simplex(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) by_simplex[order[j]] = perm[j];
    if (find_violation(DiscreteMorseFunction(tree, std::move(by_simplex)))) continue;
    out.emplace_back(path, std::vector<Rational>(perm.begin(), perm.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// Canonical string of the tree rooted at v, children sorted.
std::string rooted_form(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t from) {
  std::vector<std::string> kids;
  for (std::size_t w : adj[v])
    if (w != from) kids.push_back(rooted_form(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

}  // namespace

std::vector<SimplicialTree> enumerate_tree_shapes(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a tree has at least one vertex");
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  if (n == 1) return {SimplicialTree(ids, {})};
  if (n == 2) return {SimplicialTree(ids, {{0, 1}})};
  std::map<std::string, SimplicialTree> shapes;
  std::vector<std::size_t> code(n - 2, 0);
  for (;;) {
    // decode the Pruefer sequence
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t c : code) ++degree[c];
    std::vector<Edge> edges;
    for (std::size_t c : code) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back({std::min<VertexId>(leaf, c), std::max<VertexId>(leaf, c)});
      --degree[leaf];
      --degree[c];
    }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.push_back({last[0], last[1]});
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : edges) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    std::string best;
    for (std::size_t v = 0; v < n; ++v) {
      std::string s = rooted_form(adj, v, n);
      if (best.empty() || s < best) best = s;
    }
    if (!shapes.count(best)) shapes.emplace(best, SimplicialTree(ids, edges));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  std::vector<SimplicialTree> out;
  for (auto& [key, t] : shapes) out.push_back(t);
  // paths first, then by number of leaves
  std::stable_sort(out.begin(), out.end(), [](const SimplicialTree& a, const SimplicialTree& b) {
    auto leaves = [](const SimplicialTree& t) {
      std::size_t c = 0;
      for (SimplexId v = 0; v < t.vertex_count(); ++v) c += t.degree(v) == 1;
      return c;
    };
    return leaves(a) < leaves(b);
  });
  return out;
}

bool path_word_less(const MergeTree& t, NodeId a, NodeId b, bool split_leaves) {
  if (a == b) return false;
  if (split_leaves && t.is_leaf(a) != t.is_leaf(b)) return t.is_leaf(a);
  auto wa = chirality_path(t, a), wb = chirality_path(t, b);
  std::size_t k = 0;
  while (k + 1 < wa.size() && k + 1 < wb.size() && wa[k + 1] == wb[k + 1]) ++k;
  Chirality c = wa[k];
  if (wb.size() == k + 1) return true;   // b is an ancestor of a
  if (wa.size() == k + 1) return false;  // a is an ancestor of b
  return wa[k + 1] == c;
}

bool simplex_order_less(const MergeTree& t, NodeId a, NodeId b) {
  if (a == b) return false;
  NodeId p = youngest_common_ancestor(t, a, b);
  if (p != a && p != b)
    return is_ancestor_or_self(t, t.left(p), a) && is_ancestor_or_self(t, t.right(p), b);
  if (p == b) return is_ancestor_or_self(t, t.left(b), a);
  return is_ancestor_or_self(t, t.right(a), b);
}

bool EnumerationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failures == 0; });
}

std::string EnumerationReport::format(bool color) const {
  std::ostringstream out;
  out << "selftest: up to " << max_leaves << " leaves, " << max_vertices << " path vertices\n";
  for (const auto& [name, count] : counts) out << "  count  " << name << " = " << count << '\n';
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    bool pass = c.failures == 0;
    std::string tag = pass ? "PASS" : "FAIL";
    if (color) tag = (pass ? "\033[32m" : "\033[31m") + tag + "\033[0m";
    out << "  " << tag << "  " << c.name << std::string(width - c.name.size(), ' ') << "  "
        << c.instances << " instances";
    if (!pass) out << ", " << c.failures << " failures";
    out << '\n';
    for (const auto& w : c.witnesses) out << "        " << w << '\n';
  }
  out << (ok() ? "all checks passed\n" : "some checks failed\n");
  return out.str();
}

namespace {

class Recorder {
 public:
  explicit Recorder(EnumerationReport& r) : report_(r) {}

  void check(const std::string& name, bool ok, const std::function<std::string()>& witness) {
    CheckResult& c = slot(name);
    ++c.instances;
    if (ok) return;
    ++c.failures;
    if (c.witnesses.size() < 5) c.witnesses.push_back(witness());
  }

  // Runs body; an exception counts as a failure of `name`.
  void guarded(const std::string& name, const std::function<std::string()>& witness,
               const std::function<bool()>& body) {
    bool ok = false;
    std::string extra;
    try {
      ok = body();
    } catch (const std::exception& e) {
      extra = std::string(" threw: ") + e.what();
    }
    check(name, ok, [&] { return witness() + extra; });
  }

 private:
  CheckResult& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return report_.checks[it->second];
    index_.emplace(name, report_.checks.size());
    report_.checks.push_back(CheckResult{name, 0, 0, {}});
    return report_.checks.back();
  }

  EnumerationReport& report_;
  std::map<std::string, std::size_t> index_;
};

std::string values_text(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

std::size_t catalan(std::size_t n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[n];
}

void check_trees(const VerifyOptions& options, EnumerationReport& report, Recorder& rec) {
  for (std::size_t n = 1; n <= options.max_leaves; ++n) {
    auto trees = enumerate_merge_trees(n);
    report.counts.emplace_back("merge trees with " + std::to_string(n) + " leaves", trees.size());
    std::set<std::string> forms;
    for (const auto& t : trees) forms.insert(to_text(t));
    rec.check("merge tree count is Catalan", trees.size() == catalan(n - 1) && forms.size() == trees.size(),
              [&] { return std::to_string(n) + " leaves: " + std::to_string(forms.size()); });

    for (const MergeTree& t : trees) {
      const std::string name = to_text(t);
      auto w = [&] { return "tree " + name; };
      rec.check("tree structure invariants", !t.check() && t.leaf_count() == t.inner_count() + 1, w);

      std::set<std::string> words;
      bool prefix_ok = true;
      for (NodeId a = 0; a < t.size(); ++a) {
        words.insert(path_word(t, a));
        for (NodeId b = 0; b < t.size(); ++b) {
          auto wa = chirality_path(t, a), wb = chirality_path(t, b);
          bool prefix = wa.size() <= wb.size() && std::equal(wa.begin(), wa.end(), wb.begin());
          if (prefix != is_ancestor_or_self(t, a, b)) prefix_ok = false;
        }
      }
      rec.check("path words injective, prefixes are ancestors", words.size() == t.size() && prefix_ok, w);

      std::vector<NodeId> nodes(t.size());
      std::iota(nodes.begin(), nodes.end(), NodeId{0});
      auto by = [&](auto less) {
        auto v = nodes;
        std::sort(v.begin(), v.end(), less);
        return v;
      };
      MorseOrder io = index_morse_order(t), sc = sublevel_connected_morse_order(t);
      rec.check("index order equals path-word comparator",
                io == by([&](NodeId a, NodeId b) { return path_word_less(t, a, b, true); }), w);
      rec.check("sublevel order equals path-word comparator",
                sc == by([&](NodeId a, NodeId b) { return path_word_less(t, a, b, false); }), w);
      rec.check("index and sublevel orders are Morse orders", is_morse_order(t, io) && is_morse_order(t, sc), w);

      std::vector<std::size_t> rank(t.size());
      for (std::size_t i = 0; i < sc.size(); ++i) rank[sc[i]] = i;
      bool intervals = true;
      for (NodeId p = 0; p < t.size(); ++p) {
        auto sub = t.preorder(p);
        std::size_t lo = t.size(), hi = 0;
        for (NodeId x : sub) {
          lo = std::min(lo, rank[x]);
          hi = std::max(hi, rank[x]);
        }
        if (hi - lo + 1 != sub.size()) intervals = false;
      }
      rec.check("sublevel order: subtrees are intervals", intervals, w);

      auto restrict = [&](const MorseOrder& o, bool leaves) {
        MorseOrder r;
        for (NodeId x : o)
          if (t.is_leaf(x) == leaves) r.push_back(x);
        return r;
      };
      rec.check("index and sublevel orders agree on leaves and on inner nodes",
                restrict(io, true) == restrict(sc, true) && restrict(io, false) == restrict(sc, false), w);

      auto so = simplex_order_tree(t);
      rec.check("simplex order equals youngest-ancestor comparator",
                so == by([&](NodeId a, NodeId b) { return simplex_order_less(t, a, b); }), w);
      bool parity = true;
      for (std::size_t j = 0; j < so.size(); ++j)
        if (t.is_leaf(so[j]) != (j % 2 == 0)) parity = false;
      rec.check("phi sends vertices to leaves and edges to inner nodes", parity, w);

      Labeling lio = labeling_from_order(t, io);
      rec.check("order/labeling round trip",
                order_from_labeling(t, lio) == io && labeling_from_order(t, order_from_labeling(t, lio)) == lio, w);

      PathFunction fio = build_index_ordered_dmf(t), fsc = build_sublevel_connected_dmf(t);
      std::vector<StepRecord> trace;
      rec.guarded("step-by-step construction equals f_io", w, [&] {
        return step_by_step_dmf(t, &trace).values == fio.values;
      });
      auto inner_desc = restrict(io, false);
      std::reverse(inner_desc.begin(), inner_desc.end());
      std::vector<NodeId> visited;
      for (const auto& r : trace) visited.push_back(r.node);
      if (t.is_leaf(t.root())) visited.clear();
      rec.check("step-by-step visits inner nodes in descending index order", visited == inner_desc, w);

      rec.check("f_io is index-ordered", is_index_ordered(fio.as_dmf()), w);
      rec.check("f_sc is sublevel-connected", is_sublevel_connected(fsc.as_dmf()), w);
      rec.check("induced merge tree of f_io is the tree", isomorphic(induced_merge_tree(fio), t), w);
      rec.check("induced merge tree of f_sc is the tree", isomorphic(induced_merge_tree(fsc), t), w);
      rec.check("Ml tree of f_io carries the index labeling",
                ml_isomorphic(induced_ml_tree(fio), MlTree{t, lio}, LabelMatch::exact), w);
      rec.check("f_io and f_sc are shuffle-equivalent", shuffle_equivalent(fio, fsc).equivalent, w);
      rec.check("index and sublevel Ml trees are shuffle-equivalent",
                ml_shuffle_equivalent(MlTree{t, lio}, MlTree{t, labeling_from_order(t, sc)}), w);

      if (n <= 5) {
        CMlTree base{t, lio};
        MlTree q = js_quotient(base);
        std::vector<NodeId> inner;
        for (NodeId x = 0; x < t.size(); ++x)
          if (t.is_inner(x)) inner.push_back(x);
        bool stable = true, curry = true;
        for (std::size_t mask = 0; mask < (std::size_t{1} << inner.size()); ++mask) {
          CMlTree r = base;
          for (std::size_t i = 0; i < inner.size(); ++i)
            if (mask >> i & 1) r = reflect_subtree(r, inner[i]);
          if (!ml_isomorphic(js_quotient(r), q, LabelMatch::exact)) stable = false;
          if (!is_curry_morse_labeling(r.tree, r.labels)) curry = false;
        }
        rec.check("js quotient is invariant under subtree reflections", stable, w);
        rec.check("reflections keep the Curry property", curry, w);
      }
    }
  }
}

// Critical values of a component and of the subtree that should represent it.
bool components_match_subtrees(const DiscreteMorseFunction& f, const InducedTree& ind, const CriticalData& d) {
  for (const Rational& c : d.critical_values) {
    Subcomplex level = sublevel_complex(f, c);
    for (const Subcomplex& comp : connected_components(level)) {
      std::multiset<Rational> crit;
      for (SimplexId s : comp.simplices())
        if (d.is_critical(s)) crit.insert(f.value(s));
      auto node = node_with_label(ind.ml.tree, ind.ml.labels, *crit.rbegin());
      if (!node) return false;
      std::multiset<Rational> sub;
      for (NodeId x : ind.ml.tree.preorder(*node)) sub.insert(ind.ml.labels[x]);
      if (sub != crit) return false;
    }
  }
  return true;
}

bool lemma_extrema(const DiscreteMorseFunction& f, const CriticalData& d) {
  const SimplicialTree& t = f.complex();
  for (const Rational& c : d.critical_values) {
    for (const Subcomplex& comp : connected_components(sublevel_complex(f, c))) {
      SimplexId low = min_simplex(f, comp);
      if (!t.is_vertex(low) || !d.is_critical(low)) return false;
      std::optional<SimplexId> top;
      bool has_edge = false;
      for (SimplexId s : comp.simplices()) {
        if (!d.is_critical(s)) continue;
        has_edge |= t.is_edge(s);
        if (!top || f.value(s) > f.value(*top)) top = s;
      }
      if (has_edge && !t.is_edge(*top)) return false;
    }
  }
  return true;
}

void check_path_functions(const VerifyOptions& options, EnumerationReport& report, Recorder& rec) {
  std::size_t counter = 0;
  for (std::size_t n = 1; n <= options.max_vertices; ++n) {
    auto all = enumerate_crit_dmfs(n);
    report.counts.emplace_back("all-critical functions on the " + std::to_string(n) + "-vertex path", all.size());

    std::map<std::vector<Rational>, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i].values] = i;
    // orbits
    std::vector<std::size_t> orbit_of(all.size(), all.size());
    std::vector<std::size_t> orbit_rep;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (orbit_of[i] != all.size()) continue;
      std::size_t id = orbit_rep.size();
      orbit_rep.push_back(i);
      for (const PathFunction& g : sublevel_orbit(all[i])) orbit_of[index.at(g.values)] = id;
    }
    report.counts.emplace_back("symmetry orbits on the " + std::to_string(n) + "-vertex path", orbit_rep.size());

    std::map<std::string, std::size_t> key_orbit;
    std::map<std::string, std::string> shuffle_shape;
    std::set<std::string> ml_classes;
    std::vector<CMlTree> rep_cml(orbit_rep.size());
    for (std::size_t id = 0; id < orbit_rep.size(); ++id) rep_cml[id] = induced_cml_tree(all[orbit_rep[id]]);

    for (std::size_t i = 0; i < all.size(); ++i, ++counter) {
      const PathFunction& f = all[i];
      const std::string fv = values_text(f.values);
      auto w = [&] { return "f = " + fv; };
      DiscreteMorseFunction df = f.as_dmf();
      CriticalData d = validate(df);
      InducedTree ind = induce(df);
      if (options.corrupt_induced_tree && *options.corrupt_induced_tree == counter) {
        for (NodeId x : ind.ml.tree.preorder())
          if (ind.ml.tree.is_inner(x)) ind.ml.tree.swap_children(x);
      }
      const MlTree& ml = ind.ml;

      rec.check("minimum on a critical vertex, maximum on a critical edge", lemma_extrema(df, d), w);
      rec.check("induced labeling is a Morse labeling", is_morse_labeling(ml.tree, ml.labels), w);
      {
        std::vector<Rational> leaves, inner;
        for (NodeId x = 0; x < ml.tree.size(); ++x)
          (ml.tree.is_leaf(x) ? leaves : inner).push_back(ml.labels[x]);
        std::sort(leaves.begin(), leaves.end());
        std::sort(inner.begin(), inner.end());
        rec.check("leaves carry critical vertex values, inner nodes critical edge values",
                  leaves == d.critical_vertex_values && inner == d.critical_edge_values, w);
      }
      rec.check("sublevel components correspond to subtrees", components_match_subtrees(df, ind, d), w);

      PathFunction back = induced_dmf(induce(df).ml);
      auto found = index.find(back.values);
      rec.check("realizing the induced Ml tree stays in the symmetry orbit",
                found != index.end() && orbit_of[found->second] == orbit_of[i], w);
      rec.check("Ml tree of the realization equals the induced Ml tree",
                ml_isomorphic(induced_ml_tree(back), ml, LabelMatch::exact), w);

      std::string key = to_text(ml.tree, ml.labels);
      ml_classes.insert(key);
      auto [it, fresh] = key_orbit.emplace(key, orbit_of[i]);
      rec.check("Ml isomorphism agrees with orbit membership", it->second == orbit_of[i], w);

      // shuffle class: ranks of critical vertices and of critical edges
      std::vector<Rational> verts, edges;
      for (std::size_t j = 0; j < f.values.size(); ++j) (j % 2 ? edges : verts).push_back(f.values[j]);
      auto ranks = [](std::vector<Rational> v) {
        std::vector<Rational> s = v;
        std::sort(s.begin(), s.end());
        std::string r;
        for (const auto& x : v)
          r += std::to_string(std::lower_bound(s.begin(), s.end(), x) - s.begin()) + ",";
        return r;
      };
      std::string skey = ranks(verts) + "|" + ranks(edges);
      auto [sit, sfresh] = shuffle_shape.emplace(skey, to_text(ml.tree));
      rec.check("shuffle-equivalent functions give isomorphic merge trees", sit->second == to_text(ml.tree), w);

      const PathFunction& rep = all[orbit_rep[orbit_of[i]]];
      rec.guarded("cm equivalence on paths matches symmetry classes", w, [&] {
        return cm_equivalent(df, rep.as_dmf()).equivalent && cm_to_path(df).values == f.values;
      });

      CMlTree cml = induced_cml_tree(f);
      rec.check("Curry labeling is root-maximal", is_curry_morse_labeling(cml.tree, cml.labels), w);
      rec.check("js quotient of the Curry tree is the Ml tree",
                ml_isomorphic(js_quotient(cml), ml, LabelMatch::exact), w);
      PathFunction rf = o_js(f);
      auto rit = index.find(rf.values);
      rec.check("o_JS is idempotent and stays in the orbit",
                o_js(rf) == rf && rit != index.end() && orbit_of[rit->second] == orbit_of[i], w);
      rec.check("o_JS representative has Curry tree equal to the Ml tree",
                ml_isomorphic(MlTree{induced_cml_tree(rf).tree, induced_cml_tree(rf).labels}, ml, LabelMatch::exact), w);
      auto seq = reflection_sequence(rep_cml[orbit_of[i]], cml);
      bool replay = false;
      if (seq) {
        CMlTree r = rep_cml[orbit_of[i]];
        for (NodeId x : *seq) r = reflect_subtree(r, x);
        replay = to_text(r.tree, r.labels) == to_text(cml.tree, cml.labels);
      }
      rec.check("Curry trees in an orbit are related by reflections", replay, w);
      rec.guarded("PL round trip", w, [&] { return pl_to_dmf(dmf_to_pl(f)) == PathFunction(f.values); });
    }
    rec.check("Ml classes and symmetry orbits are equinumerous", ml_classes.size() == orbit_rep.size(), [&] {
      return std::to_string(n) + " vertices: " + std::to_string(ml_classes.size()) + " Ml classes vs " +
             std::to_string(orbit_rep.size()) + " orbits";
    });
  }
}

void check_tree_functions(const VerifyOptions& options, EnumerationReport& report, Recorder& rec) {
  for (std::size_t n = 1; n <= options.max_tree_vertices; ++n) {
    std::size_t total = 0;
    for (const SimplicialTree& shape : enumerate_tree_shapes(n)) {
      for (const DiscreteMorseFunction& f : enumerate_crit_dmfs(shape)) {
        ++total;
        auto w = [&] { return format_tree_function(f); };
        MlTree ml = induced_ml_tree(f);
        rec.check("induced labeling on trees is a Morse labeling", is_morse_labeling(ml.tree, ml.labels), w);
        rec.guarded("cm_to_path keeps values and the Ml tree", w, [&] {
          PathFunction p = cm_to_path(f);
          auto a = p.values, b = f.values();
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          return !find_violation(p.as_dmf()) && a == b &&
                 ml_isomorphic(induced_ml_tree(p), ml, LabelMatch::exact);
        });
      }
    }
    report.counts.emplace_back("all-critical functions on " + std::to_string(n) + "-vertex trees", total);
  }
}

}  // namespace

EnumerationReport verify_theorems(const VerifyOptions& options) {
  EnumerationReport report;
  report.max_leaves = options.max_leaves;
  report.max_vertices = options.max_vertices;
  Recorder rec(report);
  check_trees(options, report, rec);
  check_path_functions(options, report, rec);
  check_tree_functions(options, report, rec);
  return report;
}

}  // namespace morsetree
