#include "support/golden.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace golden {

using namespace morsetree;

std::string data_path(const std::string& name) { return std::string(MORSETREE_TEST_DATA) + "/" + name; }

std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::vector<StepState>& fifteen_leaf_steps() {
  static const std::vector<StepState> steps = {
      {"L", {0, 2, 1}},
      {"LR", {0, 4, 2, 3, 1}},
      {"RL", {0, 6, 2, 4, 3, 5, 1}},
      {"LR", {0, 8, 2, 6, 4, 5, 3, 7, 1}},
      {"RL", {0, 10, 2, 8, 4, 6, 5, 7, 3, 9, 1}},
      {"RR", {0, 12, 3, 10, 5, 8, 6, 9, 4, 11, 2, 7, 1}},
      {"RL", {0, 14, 4, 12, 6, 10, 7, 11, 5, 13, 2, 8, 3, 9, 1}},
      {"LR", {0, 16, 5, 14, 7, 12, 8, 13, 6, 15, 2, 10, 4, 9, 3, 11, 1}},
      {"LL", {0, 10, 1, 18, 6, 16, 8, 14, 9, 15, 7, 17, 3, 12, 5, 11, 4, 13, 2}},
      {"LR", {0, 12, 2, 11, 1, 20, 7, 18, 9, 16, 10, 17, 8, 19, 4, 14, 6, 13, 5, 15, 3}},
      {"RR", {0, 14, 3, 13, 2, 12, 1, 22, 8, 20, 10, 18, 11, 19, 9, 21, 5, 16, 7, 15, 6, 17, 4}},
      {"LL", {0, 13, 1, 16, 4, 15, 3, 14, 2, 24, 9, 22, 11, 20, 12, 21, 10, 23, 6, 18, 8, 17, 7, 19, 5}},
      {"LL", {0, 14, 1, 15, 2, 18, 5, 17, 4, 16, 3, 26, 10, 24, 12, 22, 13, 23, 11, 25, 7, 20, 9, 19, 8, 21, 6}},
      {"LR", {0, 16, 2, 15, 1, 17, 3, 20, 6, 19, 5, 18, 4, 28, 11, 26, 13, 24, 14, 25, 12, 27, 8, 22, 10, 21, 9, 23, 7}},
  };
  return steps;
}

bool brute_force_is_dmf(const DiscreteMorseFunction& f) {
  const SimplicialTree& t = f.complex();
  const std::size_t n = t.simplex_count();
  auto face = [&](SimplexId s, SimplexId e) {
    return t.is_vertex(s) && t.is_edge(e) && (t.faces(e)[0] == s || t.faces(e)[1] == s);
  };
  for (SimplexId s = 0; s < n; ++s) {
    std::size_t same = 0;
    for (SimplexId u = 0; u < n; ++u) {
      if (face(s, u) && f.value(s) > f.value(u)) return false;  // weakly increasing
      if (u != s && f.value(u) == f.value(s)) {
        ++same;
        if (!face(s, u) && !face(u, s)) return false;  // only incident pairs tie
      }
    }
    if (same > 1) return false;  // at most 2-1
  }
  return true;
}

PathFunction path(std::initializer_list<long long> values) { return make_path_function(values); }

MergeTree tree(const std::string& text) { return parse_merge_tree(text).tree; }

MlTree ml(const std::string& labeled_text) {
  ParsedTree p = parse_merge_tree(labeled_text);
  if (!p.labels) throw std::runtime_error("expected a labeled tree: " + labeled_text);
  return MlTree{p.tree, *p.labels};
}

std::string values_text(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

}  // namespace golden
