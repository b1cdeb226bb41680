#include <gtest/gtest.h>

#include <set>

#include "morsetree/error.hpp"
#include "morsetree/merge_tree.hpp"
#include "support/golden.hpp"

using namespace morsetree;

namespace {

NodeId at(const MergeTree& t, const char* word) {
  auto n = node_at(t, word);
  if (!n) throw std::runtime_error(std::string("no node ") + word);
  return *n;
}

// Catalan numbers by the recurrence, independent of any tree code.
std::size_t catalan(std::size_t n) {
  std::vector<std::size_t> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[n];
}

// Every full binary tree with n leaves, grown by splitting leaves, deduplicated by text.
std::set<std::string> grow(std::size_t n) {
  std::set<std::string> cur{to_text(MergeTree())};
  std::vector<MergeTree> trees{MergeTree()};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<MergeTree> next;
    std::set<std::string> seen;
    for (const MergeTree& t : trees)
      for (NodeId x = 0; x < t.size(); ++x)
        if (t.is_leaf(x)) {
          MergeTree u = t;
          u.split(x);
          if (seen.insert(to_text(u)).second) next.push_back(u);
        }
    trees = next;
    cur = seen;
  }
  return cur;
}

}  // namespace

TEST(MergeTree, PathWords) {
  MergeTree t = golden::tree(golden::nine_node_tree);
  EXPECT_EQ(t.height(), 3u);
  EXPECT_EQ(path_word(t, t.root()), "L___");
  NodeId deep = at(t, "LLRL");
  EXPECT_EQ(path_word(t, deep), "LLRL");
  EXPECT_EQ(t.depth(deep), 3u);
  EXPECT_EQ(path_word(t, at(t, "LR")), "LR__");

  MergeTree cherry;
  cherry.split(0);
  EXPECT_EQ(path_word(cherry, cherry.right(0)), "LR");
  EXPECT_FALSE(node_at(cherry, "LL L"));
}

TEST(MergeTree, YoungestCommonAncestor) {
  MergeTree t = golden::tree(golden::nine_node_tree);
  NodeId a = at(t, "LLRL"), b = at(t, "LRR");
  EXPECT_EQ(youngest_common_ancestor(t, a, b), t.root());
  EXPECT_EQ(youngest_common_ancestor(t, a, a), a);
  EXPECT_EQ(youngest_common_ancestor(t, at(t, "LL"), a), at(t, "LL"));
  EXPECT_EQ(youngest_common_ancestor(t, a, at(t, "LLL")), at(t, "LL"));
  EXPECT_TRUE(is_ancestor_or_self(t, at(t, "LL"), a));
  EXPECT_FALSE(is_ancestor_or_self(t, at(t, "LR"), a));
  EXPECT_EQ(ancestors(t, a), (std::vector<NodeId>{at(t, "LLR"), at(t, "LL"), t.root()}));
}

TEST(MergeTree, SubtreesAndDescendants) {
  MergeTree t = golden::tree(golden::nine_node_tree);
  std::vector<NodeId> want = {at(t, "LLL"), at(t, "LLR"), at(t, "LLRL"), at(t, "LLRR")};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(descendants(t, at(t, "LL")), want);
  EXPECT_EQ(subtree(t, at(t, "LLRL")).size(), 1u);
  EXPECT_EQ(to_text(subtree(t, t.root())), to_text(t));
  std::vector<NodeId> map;
  MergeTree s = subtree(t, at(t, "LR"), &map);
  EXPECT_EQ(to_text(s), "(*,*)");
  EXPECT_EQ(map[0], at(t, "LR"));
  EXPECT_EQ(s.chirality(s.root()), Chirality::right);
}

TEST(MergeTree, Isomorphism) {
  MergeTree t = golden::tree(golden::nine_node_tree);
  EXPECT_TRUE(isomorphic(t, t));
  auto map = tree_isomorphism(t, golden::tree(golden::nine_node_tree));
  ASSERT_TRUE(map);
  EXPECT_EQ((*map)[t.root()], 0u);

  // Mirroring a cherry of leaves keeps the unlabeled shape, but labels move sides.
  MergeTree m = t;
  m.swap_children(t.root());
  EXPECT_FALSE(isomorphic(t, m));
  EXPECT_EQ(to_text(m), "((*,*),(*,(*,*)))");
  EXPECT_FALSE(m.check());

  EXPECT_FALSE(isomorphic(golden::tree("((*,*),*)"), golden::tree("(*,(*,*))")));
}

TEST(MergeTree, CountsAreCatalan) {
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(grow(n).size(), catalan(n - 1)) << n;
}

TEST(MergeTree, SplitOrderDoesNotChangeShape) {
  MergeTree a, b;
  a.split(0, Chirality::left);
  b.split(0, Chirality::right);
  EXPECT_EQ(a.left(0), 1u);
  EXPECT_EQ(b.right(0), 1u);
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_EQ(b.chirality(b.left(0)), Chirality::left);
}

TEST(MergeTree, TextRoundTrip) {
  for (const char* s : {"*", "(*,*)", golden::nine_node_tree, golden::fifteen_leaf_tree})
    EXPECT_EQ(to_text(golden::tree(s)), s);
  ParsedTree p = parse_merge_tree(" # labeled\n((0,(2,1):5):6,\n (4,3):7):8\n");
  ASSERT_TRUE(p.labels);
  EXPECT_EQ(to_text(p.tree, *p.labels), golden::nine_node_index_labeled);
  ParsedTree q = parse_merge_tree("(1/2,-3):7/3");
  EXPECT_EQ(to_text(q.tree, *q.labels), "(1/2,-3):7/3");
}

TEST(MergeTree, ParseErrorsCarryPositions) {
  auto fails_at = [](const char* text, std::size_t line, std::size_t col) {
    try {
      parse_merge_tree(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const InputError& e) {
      EXPECT_EQ(e.line(), line) << text << ": " << e.what();
      EXPECT_EQ(e.column(), col) << text << ": " << e.what();
    }
  };
  fails_at("(*,*", 1, 5);
  fails_at("(*;*)", 1, 3);
  fails_at("\n(*,*) x", 2, 7);
  EXPECT_THROW(parse_merge_tree(""), InputError);
  EXPECT_THROW(parse_merge_tree("(0,*):1"), InputError);
  EXPECT_THROW(parse_merge_tree("(0,1)"), InputError);
  EXPECT_THROW(parse_merge_tree("(*,*):3"), InputError);
}

TEST(MergeTree, Dot) {
  MergeTree t = golden::tree("(*,*)");
  std::vector<Rational> labels(3);
  labels[0] = 2;
  labels[t.left(0)] = 0;
  labels[t.right(0)] = 1;
  std::string dot = to_dot(t, &labels, "g");
  EXPECT_EQ(dot.rfind("digraph g {", 0), 0u);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("label=\"L\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"R\""), std::string::npos);
  EXPECT_NE(dot.find("\"2\""), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}
