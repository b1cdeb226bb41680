// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "morsetree/cli.hpp"
#include "morsetree/morsetree.hpp"
#include "support/golden.hpp"

using namespace morsetree;

namespace {

struct Check {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok) ++failures;
  }
  std::size_t failures = 0;
  std::string note;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::vector<MergeTree> trees_up_to(std::size_t n) {
  std::vector<MergeTree> all;
  for (std::size_t k = 1; k <= n; ++k)
    for (MergeTree& t : enumerate_merge_trees(k)) all.push_back(std::move(t));
  return all;
}

// ---- criteria

void induce_ten_vertex_tree(Check& c) {
  CliRun r = cli_run({"induce", golden::data_path("tree10.dmf")});
  c.expect(r.code == 0, "induce exit code " + std::to_string(r.code));
  c.expect(r.out == std::string(golden::tree10_ml) + "\n", "induce printed " + r.out);
  CliRun v = cli_run({"validate", golden::data_path("tree10.dmf")});
  c.expect(v.out.find("critical edge values: 5 6 9 11 14\n") != std::string::npos,
           "critical edges differ: " + v.out);
}

void realize_nine_node_tree(Check& c) {
  CliRun r = cli_run({"realize", golden::data_path("nine_node.mt"), "--order", "index"});
  c.expect(r.code == 0 && r.out == "0 6 2 5 1 8 4 7 3\n", "realize printed " + r.out);
  CliRun o = cli_run({"order", golden::data_path("nine_node.mt"), "--kind", "index"});
  c.expect(o.out == std::string(golden::nine_node_index_chain) + "\n", "chain " + o.out);
}

void replay_fifteen_leaf_steps(Check& c) {
  CliRun r = cli_run({"realize", golden::data_path("fifteen_leaf.mt"), "--order", "step", "--trace"});
  c.expect(r.code == 0, "exit code " + std::to_string(r.code));
  std::istringstream lines(r.out);
  std::vector<std::string> step_lines;
  std::string final_line;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("Step ", 0) == 0) step_lines.push_back(line);
    else if (!line.empty()) final_line = line;
  }
  const auto& want = golden::fifteen_leaf_steps();
  c.expect(step_lines.size() == want.size(), "trace has " + std::to_string(step_lines.size()) + " steps");
  for (std::size_t i = 0; i < want.size() && i < step_lines.size(); ++i) {
    const std::string& line = step_lines[i];
    std::string head = "Step " + std::to_string(i) + " (" + want[i].tag + ")";
    c.expect(line.rfind(head, 0) == 0, "step header: " + line);
    std::string labels = line.substr(line.rfind(": ") + 2);
    c.expect(labels == join(want[i].labels), "step " + std::to_string(i) + ": " + labels);
  }
  c.expect(final_line == join(want.back().labels), "final path " + final_line);
}

void step_equals_index(Check& c) {
  auto trees = trees_up_to(7);
  c.expect(trees.size() == 197, "tree count " + std::to_string(trees.size()));
  for (const MergeTree& t : trees)
    c.expect(step_by_step_dmf(t) == build_index_ordered_dmf(t), to_text(t));
  c.note = std::to_string(trees.size()) + " trees";
}

void realizations_round_trip(Check& c) {
  auto trees = trees_up_to(7);
  c.expect(trees.size() == 197, "tree count " + std::to_string(trees.size()));
  for (const MergeTree& t : trees) {
    PathFunction io = build_index_ordered_dmf(t), sc = build_sublevel_connected_dmf(t);
    c.expect(isomorphic(induced_merge_tree(io), t), "io " + to_text(t));
    c.expect(isomorphic(induced_merge_tree(sc), t), "sc " + to_text(t));
    c.expect(shuffle_equivalent(io, sc).equivalent, "shuffle " + to_text(t));
  }
  c.note = std::to_string(trees.size()) + " trees";
}

void symmetry_round_trip(Check& c) {
  std::size_t total = 0;
  std::string counts;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<PathFunction> fs = enumerate_crit_dmfs(n);
    counts += (n > 1 ? "," : "") + std::to_string(fs.size());
    if (n == 2) c.expect(fs.size() == 2, "n=2 count");
    if (n == 3) c.expect(fs.size() == 16, "n=3 count");
    total += fs.size();
    // Classes by induced Ml tree.
    std::map<std::string, std::set<std::vector<Rational>>> by_tree;
    for (const auto& f : fs) by_tree[induced_ml_tree(f).text()].insert(f.values);
    for (const auto& f : fs) {
      PathFunction back = induced_dmf(induced_ml_tree(f));
      c.expect(symmetry_equivalent(back, f).equivalent, "realization " + format_path_function(f));
      std::set<std::vector<Rational>> orbit;
      for (const auto& g : sublevel_orbit(f)) orbit.insert(g.values);
      c.expect(orbit.count(back.values) == 1, "realization outside orbit " + format_path_function(f));
      c.expect(orbit == by_tree[induced_ml_tree(f).text()], "orbit != class " + format_path_function(f));
      // The decision procedure itself, against every orbit member.
      for (const auto& g : orbit)
        c.expect(symmetry_equivalent(f, PathFunction(g)).equivalent, "member " + format_path_function(f));
    }
    // And against every non-member for the smaller sizes.
    if (n <= 4)
      for (const auto& f : fs) {
        auto key = induced_ml_tree(f).text();
        for (const auto& g : fs)
          c.expect(symmetry_equivalent(f, g).equivalent == (by_tree[key].count(g.values) == 1),
                   "pair " + format_path_function(f));
      }
  }
  c.note = std::to_string(total) + " functions (" + counts + ")";
}

void cm_machinery(Check& c) {
  CliRun r = cli_run({"equiv", "--relation", "cm", golden::data_path("sym_a.dmf"), golden::data_path("star.dmf")});
  c.expect(r.code == 0, "cm equiv exit code " + std::to_string(r.code));
  DiscreteMorseFunction star = parse_function(golden::read_data("star.dmf")).function;
  PathFunction p = cm_to_path(star);
  c.expect(ml_isomorphic(induced_ml_tree(p), induced_ml_tree(star), LabelMatch::exact), "cm_to_path tree");
  std::size_t instances = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<PathFunction> fs = enumerate_crit_dmfs(n);
    // Representatives of the symmetry classes.
    std::vector<PathFunction> reps;
    std::vector<std::size_t> cls(fs.size());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto orbit = sublevel_orbit(fs[i]);
      auto [it, fresh] = index.emplace(format_path_function(orbit.front()), reps.size());
      if (fresh) reps.push_back(orbit.front());
      cls[i] = it->second;
    }
    for (std::size_t i = 0; i < fs.size(); ++i)
      c.expect(cm_equivalent(fs[i].as_dmf(), reps[cls[i]].as_dmf()).equivalent,
               "cm misses " + format_path_function(fs[i]));
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        c.expect(!cm_equivalent(reps[a].as_dmf(), reps[b].as_dmf()).equivalent,
                 "cm merges " + format_path_function(reps[a]));
    instances += fs.size();
  }
  c.note = std::to_string(instances) + " path functions";
}

void curry_suite(Check& c) {
  PathFunction f = golden::path({0, 4, 1, 5, 2, 6, 3});
  PathFunction g = golden::path({3, 6, 1, 4, 0, 5, 2});
  CMlTree cf = induced_cml_tree(f), cg = induced_cml_tree(g);
  MlTree mf = induced_ml_tree(f), mg = induced_ml_tree(g);
  c.expect(labeled_isomorphic(cf.tree, cf.labels, mf.tree, mf.labels, LabelMatch::exact), "M_C(f) != M(f)");
  c.expect(!labeled_isomorphic(cg.tree, cg.labels, cf.tree, cf.labels, LabelMatch::exact), "M_C(g) == M_C(f)");
  c.expect(ml_isomorphic(mg, mf, LabelMatch::exact), "M(g) != M(f)");
  CMlTree t = cg;
  for (long long a : {6, 5, 4}) t = reflect_subtree(t, *node_with_label(t.tree, t.labels, a));
  c.expect(t.text() == cf.text(), "a6 a5 a4 gives " + t.text());
  c.expect(o_js(g) == f, "o_JS(g) = " + format_path_function(o_js(g)));
  std::size_t n_pl = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& h : enumerate_crit_dmfs(n)) {
      ++n_pl;
      c.expect(pl_to_dmf(dmf_to_pl(h)) == h, "PL " + format_path_function(h));
    }
  c.note = std::to_string(n_pl) + " PL round trips";
}

void validation_properties(Check& c) {
  std::mt19937 rng(20240607);
  std::size_t accepted = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    std::size_t n = 1 + rng() % 6;
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<Rational> values(2 * n - 1);
    if (rng() % 2) {
      for (auto& v : values) v = static_cast<long long>(rng() % (2 * n));
    } else {
      // A permutation with some vertex/edge neighbours tied.
      std::vector<long long> p(values.size());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      for (std::size_t i = 0; i < p.size(); ++i) values[i] = p[i];
      for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (rng() % 4 == 0) values[i + 1] = values[i];
    }
    PathFunction f(OrientedPath(ids), values);
    DiscreteMorseFunction d = f.as_dmf();
    bool brute = golden::brute_force_is_dmf(d);
    bool lib = true;
    try {
      validate(d);
    } catch (const MorseViolation&) {
      lib = false;
    }
    c.expect(brute == lib, "verdicts differ on " + format_path_function(f));
    if (!brute) continue;
    ++accepted;
    // Criticality straight from the values: no incident simplex shares the value.
    const SimplicialTree& t = d.complex();
    auto critical = [&](SimplexId s) {
      for (SimplexId u = 0; u < t.simplex_count(); ++u)
        if (u != s && t.incident(s, u) && d.value(u) == d.value(s)) return false;
      return true;
    };
    // Minimum of the whole path on a critical vertex.
    Rational lo = *std::min_element(d.values().begin(), d.values().end(), RationalLess{});
    bool min_ok = false;
    for (SimplexId s = 0; s < t.simplex_count(); ++s)
      if (d.value(s) == lo && t.is_vertex(s) && critical(s)) min_ok = true;
    c.expect(min_ok, "minimum not on a critical vertex: " + format_path_function(f));
    // In every sublevel component holding a critical edge, the largest
    // critical value sits on a critical edge.
    for (SimplexId level = 0; level < t.simplex_count(); ++level)
      for (const Subcomplex& comp : connected_components(sublevel_complex(d, d.value(level)))) {
        std::optional<SimplexId> top;
        bool has_edge = false;
        for (SimplexId s : comp.simplices()) {
          if (!critical(s)) continue;
          if (t.is_edge(s)) has_edge = true;
          if (!top || d.value(s) > d.value(*top)) top = s;
        }
        if (has_edge)
          c.expect(t.is_edge(*top), "largest critical value not on an edge: " + format_path_function(f));
      }
  }
  c.note = std::to_string(accepted) + " of 10000 accepted";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "induced merge tree of the 10-vertex tree function", 1, induce_ten_vertex_tree},
      {2, "index-ordered realization of the 9-node tree", 1, realize_nine_node_tree},
      {3, "step-by-step replay of the 15-leaf tree", 1, replay_fifteen_leaf_steps},
      {4, "step-by-step equals index-ordered, all trees <= 7 leaves", 10, step_equals_index},
      {5, "merge trees of f_io and f_sc, shuffle equivalence, <= 7 leaves", 10, realizations_round_trip},
      {6, "realization round trip and symmetry vs orbits, paths <= 5 vertices", 60, symmetry_round_trip},
      {7, "cm equivalence: star example, reduction, classes on paths", 10, cm_machinery},
      {8, "Curry trees, reflections, o_JS and PL round trip", 10, curry_suite},
      {9, "validation vs brute force and extremum lemmas, 10000 random paths", 30, validation_properties},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < cr.limit_s;
    bool ok = c.failures == 0 && in_time;
    if (!ok) ++failed;
    std::ostringstream line;
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " (" << std::fixed << secs
         << " s, limit " << cr.limit_s << " s";
    if (!c.note.empty()) line << "; " << c.note;
    line << ")";
    std::cout << line.str() << '\n';
    if (!in_time) std::cout << "    too slow\n";
    for (const auto& p : c.problems) std::cout << "    " << p << '\n';
    if (c.failures > c.problems.size()) std::cout << "    ... " << c.failures << " failures in total\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
