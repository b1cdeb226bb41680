#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "morsetree/oracle.hpp"
#include "support/golden.hpp"

using namespace morsetree;

TEST(Oracle, MergeTreeCounts) {
  const std::size_t want[] = {1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 7; ++n) {
    auto ts = enumerate_merge_trees(n);
    EXPECT_EQ(ts.size(), want[n - 1]);
    std::set<std::string> texts;
    for (const auto& t : ts) {
      EXPECT_EQ(t.leaf_count(), n);
      EXPECT_FALSE(t.check());
      texts.insert(to_text(t));
    }
    EXPECT_EQ(texts.size(), ts.size());
  }
}

TEST(Oracle, PathFunctionCounts) {
  // Brute force over all permutations, filtered by the direct checker.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<long long> v(2 * n - 1);
    std::iota(v.begin(), v.end(), 0);
    std::size_t count = 0;
    do {
      PathFunction f(std::vector<Rational>(v.begin(), v.end()));
      if (golden::brute_force_is_dmf(f.as_dmf())) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    EXPECT_EQ(enumerate_crit_dmfs(n).size(), count) << n;
  }
  EXPECT_EQ(enumerate_crit_dmfs(1).size(), 1u);
  EXPECT_EQ(enumerate_crit_dmfs(2).size(), 2u);
  EXPECT_EQ(enumerate_crit_dmfs(3).size(), 16u);
  auto two = enumerate_crit_dmfs(2);
  EXPECT_EQ(two[0], golden::path({0, 2, 1}));
  EXPECT_EQ(two[1], golden::path({1, 2, 0}));
}

TEST(Oracle, TreeShapes) {
  const std::size_t want[] = {1, 1, 1, 2, 3, 6};  // unlabeled trees
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_tree_shapes(n).size(), want[n - 1]);
  for (const SimplicialTree& t : enumerate_tree_shapes(5))
    for (const auto& f : enumerate_crit_dmfs(t)) EXPECT_TRUE(golden::brute_force_is_dmf(f));
}

TEST(Oracle, VerifyPasses) {
  VerifyOptions o;
  o.max_leaves = 5;
  o.max_vertices = 4;
  o.max_tree_vertices = 4;
  EnumerationReport r = verify_theorems(o);
  EXPECT_TRUE(r.ok()) << r.format();
  EXPECT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) EXPECT_GT(c.instances, 0u) << c.name;
}

TEST(Oracle, VerifyTwoVertices) {
  VerifyOptions o;
  o.max_leaves = 2;
  o.max_vertices = 2;
  o.max_tree_vertices = 2;
  EXPECT_TRUE(verify_theorems(o).ok());
}

TEST(Oracle, FaultInjectionIsReported) {
  VerifyOptions o;
  o.max_leaves = 4;
  o.max_vertices = 4;
  o.max_tree_vertices = 3;
  o.corrupt_induced_tree = 5;
  EnumerationReport r = verify_theorems(o);
  EXPECT_FALSE(r.ok());
  bool witnessed = false;
  for (const auto& c : r.checks)
    if (c.failures > 0 && !c.witnesses.empty()) witnessed = true;
  EXPECT_TRUE(witnessed);
  EXPECT_NE(r.format().find("FAIL"), std::string::npos);
}
