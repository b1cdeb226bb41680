#include <gtest/gtest.h>

#include <set>

#include "morsetree/equiv.hpp"
#include "morsetree/error.hpp"
#include "morsetree/oracle.hpp"
#include "morsetree/realize.hpp"
#include "support/golden.hpp"

using namespace morsetree;
using golden::path;

namespace {

PathFunction scaled(const PathFunction& f, long long k) {
  PathFunction g = f;
  for (auto& v : g.values) v *= k;
  return g;
}

// Reversal of a run of positions, done by hand.
PathFunction reverse_run(PathFunction f, std::size_t first, std::size_t last) {
  std::reverse(f.values.begin() + first, f.values.begin() + last + 1);
  return f;
}

}  // namespace

TEST(Equiv, ShuffleOfDmfs) {
  MergeTree t = golden::tree(golden::nine_node_tree);
  EXPECT_TRUE(shuffle_equivalent(build_index_ordered_dmf(t), build_sublevel_connected_dmf(t)));
  EXPECT_FALSE(shuffle_equivalent(path({0, 2, 1}), path({1, 2, 0})));
  EXPECT_TRUE(shuffle_equivalent(path({1, 2, 0}), path({1, 2, 0}), PathMatching::identity));
  EXPECT_TRUE(shuffle_equivalent(path({0, 2, 1}), path({1, 2, 0}), PathMatching::allow_reversal));
  PathFunction f = path({0, 4, 1, 5, 2, 6, 3});
  EXPECT_TRUE(shuffle_equivalent(f, scaled(f, 2)));
  EXPECT_FALSE(shuffle_equivalent(f, path({0, 4, 2, 5, 1, 6, 3})));
  // Edge order matters separately from vertex order.
  EXPECT_FALSE(shuffle_equivalent(path({0, 4, 1, 5, 2}), path({0, 5, 1, 4, 2})));
  EXPECT_TRUE(shuffle_equivalent(path({0, 4, 1, 5, 2}), path({0, 3, 1, 7, 2})));
  EquivalenceResult r = shuffle_equivalent(f.as_dmf(), scaled(f, 2).as_dmf());
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->vertex_values.size(), 4u);
  EXPECT_THROW(shuffle_equivalent(path({0, 2, 1}).as_dmf(), path({0}).as_dmf()),
               std::invalid_argument);
}

TEST(Equiv, SymmetryExamples) {
  PathFunction f = path({0, 4, 1, 5, 2, 6, 3});
  EXPECT_TRUE(symmetry_equivalent(f, path({3, 6, 2, 5, 1, 4, 0})));
  EXPECT_TRUE(symmetry_equivalent(f, path({3, 6, 1, 4, 0, 5, 2})));
  EXPECT_TRUE(symmetry_equivalent(path({0, 2, 1}), path({1, 2, 0})));
  EXPECT_FALSE(symmetry_equivalent(f, scaled(f, 2)));
  EXPECT_FALSE(symmetry_equivalent(path({0, 4, 1, 6, 2, 5, 3}), path({0, 5, 1, 6, 2, 4, 3})));
  EXPECT_THROW(symmetry_equivalent(path({3, 3, 0, 2, 1}), path({0, 2, 1})), UnsupportedRegime);
}

TEST(Equiv, SymmetryWitnessReplays) {
  PathFunction f = path({0, 4, 1, 5, 2, 6, 3});
  PathFunction g = path({3, 6, 1, 4, 0, 5, 2});
  EquivalenceResult r = symmetry_equivalent(f, g, true);
  ASSERT_TRUE(r.equivalent);
  ASSERT_TRUE(r.witness);
  PathFunction h = f;
  for (const Reflection& x : r.witness->reflections) h = reverse_run(h, x.first, x.last);
  EXPECT_EQ(h.values, g.values);
  EXPECT_FALSE(r.witness->describe().empty());
}

TEST(Equiv, ReflectionsAreSublevelComponents) {
  PathFunction f = path({0, 4, 1, 5, 2, 6, 3});
  std::vector<Reflection> gens = generator_reflections(f);
  std::set<std::pair<std::size_t, std::size_t>> runs;
  for (const Reflection& r : gens) runs.insert({r.first, r.last});
  std::set<std::pair<std::size_t, std::size_t>> want = {{0, 2}, {0, 4}, {0, 6}};
  EXPECT_EQ(runs, want);
  Reflection whole{6, 0, 6};
  EXPECT_EQ(apply_reflection(f, whole).values, reverse_run(f, 0, 6).values);
  EXPECT_EQ(apply_reflection(f, whole).values, path({3, 6, 2, 5, 1, 4, 0}).values);
}

TEST(Equiv, Orbits) {
  std::vector<PathFunction> o = sublevel_orbit(path({0, 2, 1}));
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0], path({0, 2, 1}));
  EXPECT_EQ(o[1], path({1, 2, 0}));
  EXPECT_EQ(sublevel_orbit(path({0})).size(), 1u);
  EXPECT_THROW(sublevel_orbit(path({0, 4, 1, 5, 2, 6, 3}), 3), std::length_error);
}

TEST(Equiv, SymmetryMatchesOrbitMembership) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto fs = enumerate_crit_dmfs(n);
    for (const auto& f : fs) {
      auto orbit = sublevel_orbit(f);
      for (const auto& g : fs) {
        bool in = std::find(orbit.begin(), orbit.end(), g) != orbit.end();
        EXPECT_EQ(symmetry_equivalent(f, g).equivalent, in);
      }
    }
  }
}

TEST(Equiv, CmStarAndPath) {
  LoadedFunction star = parse_function(golden::read_data("star.dmf"));
  PathFunction f = path({0, 4, 1, 5, 2, 6, 3});
  EquivalenceResult r = cm_equivalent(f.as_dmf(), star.function, true);
  EXPECT_TRUE(r.equivalent);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->second_reduction.size(), 1u);
  EXPECT_EQ(r.witness->second_reduction[0].level, 6);
  EXPECT_TRUE(cm_equivalent(star.function, star.function));
  EXPECT_FALSE(cm_equivalent(f.as_dmf(), scaled(f, 2).as_dmf()));

  std::vector<Reattachment> log;
  PathFunction p = cm_to_path(star.function, &log);
  EXPECT_EQ(log.size(), 1u);
  EXPECT_TRUE(ml_isomorphic(induced_ml_tree(p), induced_ml_tree(star.function), LabelMatch::exact));
  EXPECT_TRUE(cm_equivalent(p.as_dmf(), star.function));
}

TEST(Equiv, CmToPathKeepsPaths) {
  PathFunction f = path({0, 4, 1, 5, 2, 6, 3});
  std::vector<Reattachment> log;
  PathFunction p = cm_to_path(f.as_dmf(), &log);
  EXPECT_TRUE(log.empty());
  EXPECT_EQ(p, f);
  EXPECT_THROW(cm_to_path(path({3, 3, 0, 2, 1}).as_dmf()), UnsupportedRegime);
}

TEST(Equiv, CmToPathOnTenVertexTreeNeedsMatchedFree) {
  LoadedFunction f = parse_function(golden::read_data("tree10.dmf"));
  EXPECT_THROW(cm_to_path(f.function), UnsupportedRegime);
}

TEST(Equiv, MlTrees) {
  MlTree a = golden::ml("((0,1):3,2):4");
  MlTree b = golden::ml("((0,2):3,1):4");
  EXPECT_FALSE(ml_isomorphic(a, b));
  EXPECT_FALSE(ml_shuffle_equivalent(a, b));
  EXPECT_TRUE(ml_isomorphic(a, a, LabelMatch::exact));
  MlTree c = golden::ml("((0,2):5,4):7");
  EXPECT_TRUE(ml_isomorphic(a, c));
  EXPECT_FALSE(ml_isomorphic(a, c, LabelMatch::exact));
  MergeTree t = golden::tree(golden::nine_node_tree);
  Labeling io = labeling_from_order(t, index_morse_order(t));
  Labeling sc = labeling_from_order(t, sublevel_connected_morse_order(t));
  EXPECT_TRUE(ml_shuffle_equivalent({t, io}, {t, sc}));
  EXPECT_FALSE(ml_isomorphic({t, io}, {t, sc}));
  EXPECT_TRUE(mo_isomorphic(t, index_morse_order(t), t, index_morse_order(t)));
  EXPECT_FALSE(mo_isomorphic(t, index_morse_order(t), t, sublevel_connected_morse_order(t)));
}
