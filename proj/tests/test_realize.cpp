#include <gtest/gtest.h>

#include "morsetree/equiv.hpp"
#include "morsetree/induce.hpp"
#include "morsetree/oracle.hpp"
#include "morsetree/realize.hpp"
#include "support/golden.hpp"

using namespace morsetree;
using golden::path;

namespace {

std::vector<long long> ints(const PathFunction& f) {
  std::vector<long long> out;
  for (const Rational& v : f.values) out.push_back(static_cast<long long>(v));
  return out;
}

}  // namespace

TEST(Realize, IndexOrderedOfNineNodeTree) {
  MergeTree t = golden::tree(golden::nine_node_tree);
  EXPECT_EQ(ints(build_index_ordered_dmf(t)), golden::nine_node_f_io);
  EXPECT_EQ(ints(induced_dmf(golden::ml(golden::nine_node_index_labeled))), golden::nine_node_f_io);
}

TEST(Realize, Cherry) {
  MergeTree t = golden::tree("(*,*)");
  EXPECT_EQ(ints(induced_dmf(golden::ml("(0,1):2"))), (std::vector<long long>{0, 2, 1}));
  EXPECT_EQ(ints(build_index_ordered_dmf(t)), (std::vector<long long>{0, 2, 1}));
  EXPECT_EQ(ints(build_sublevel_connected_dmf(t)), (std::vector<long long>{0, 2, 1}));
  EXPECT_EQ(ints(step_by_step_dmf(t)), (std::vector<long long>{0, 2, 1}));
  EXPECT_EQ(ints(induced_dmf(golden::ml("(0,1):2"), Orientation::mirrored)),
            (std::vector<long long>{1, 2, 0}));
}

TEST(Realize, SublevelConnectedOfFourLeafTree) {
  MergeTree t = golden::tree("((*,*),(*,*))");
  PathFunction f = build_sublevel_connected_dmf(t);
  EXPECT_EQ(ints(f), (std::vector<long long>{0, 2, 1, 6, 4, 5, 3}));
  EXPECT_TRUE(is_sublevel_connected(f.as_dmf()));
}

TEST(Realize, RejectsNonMorseLabeling) {
  EXPECT_THROW(induced_dmf(golden::ml("(1,0):2")), std::invalid_argument);
}

TEST(Realize, SingleLeaf) {
  MergeTree t;
  EXPECT_EQ(ints(step_by_step_dmf(t)), std::vector<long long>{0});
  EXPECT_EQ(ints(build_index_ordered_dmf(t)), std::vector<long long>{0});
}

TEST(Realize, StepByStepReplaysFifteenLeafExample) {
  MergeTree t = golden::tree(golden::fifteen_leaf_tree);
  std::vector<StepRecord> trace;
  PathFunction f = step_by_step_dmf(t, &trace);
  const auto& want = golden::fifteen_leaf_steps();
  ASSERT_EQ(trace.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(trace[i].step, i);
    EXPECT_EQ(trace[i].case_tag, want[i].tag) << "step " << i;
    EXPECT_EQ(trace[i].labels, want[i].labels) << "step " << i;
  }
  EXPECT_EQ(ints(f), want.back().labels);
  EXPECT_EQ(f, build_index_ordered_dmf(t));
  EXPECT_NE(format_trace(trace).find("Step 13 (LR)"), std::string::npos);
}

TEST(Realize, StepByStepIsIncremental) {
  StepByStep s(golden::tree(golden::nine_node_tree));
  std::size_t steps = 0;
  while (s.advance()) ++steps;
  EXPECT_EQ(steps, 4u);
  EXPECT_TRUE(s.done());
  EXPECT_EQ(s.labels(), golden::nine_node_f_io);
  EXPECT_FALSE(s.advance());
}

TEST(Realize, AllBuildersAgreeAndRoundTrip) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const MergeTree& t : enumerate_merge_trees(n)) {
      PathFunction io = build_index_ordered_dmf(t);
      PathFunction sc = build_sublevel_connected_dmf(t);
      EXPECT_EQ(step_by_step_dmf(t), io) << to_text(t);
      EXPECT_TRUE(is_index_ordered(io.as_dmf()));
      EXPECT_TRUE(is_sublevel_connected(sc.as_dmf()));
      EXPECT_TRUE(isomorphic(induced_merge_tree(io), t)) << to_text(t);
      EXPECT_TRUE(isomorphic(induced_merge_tree(sc), t)) << to_text(t);
      EXPECT_TRUE(shuffle_equivalent(io, sc)) << to_text(t);
      // Realizing the induced Ml tree gives back a function with the same tree and labels.
      MlTree m = induced_ml_tree(sc);
      EXPECT_TRUE(ml_isomorphic(induced_ml_tree(induced_dmf(m)), m, LabelMatch::exact));
    }
}
