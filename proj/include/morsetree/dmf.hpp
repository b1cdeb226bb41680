#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morsetree/complex.hpp"
#include "morsetree/rational.hpp"

namespace morsetree {

// A value for every simplex of a tree. Construction only checks sizes; use
// validate() or find_violation() for the Morse conditions.
class DiscreteMorseFunction {
 public:
  // values[s] is the value on simplex s (see SimplexId).
  DiscreteMorseFunction(SimplicialTree complex, std::vector<Rational> values);

  const SimplicialTree& complex() const { return complex_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(SimplexId s) const { return values_[s]; }

  friend bool operator==(const DiscreteMorseFunction&, const DiscreteMorseFunction&) = default;

 private:
  SimplicialTree complex_;
  std::vector<Rational> values_;
};

// A function on an oriented path, values listed left to right:
// v0, e01, v1, ..., vk.
struct PathFunction {
  OrientedPath path;
  std::vector<Rational> values;

  // Throws std::invalid_argument if the value count is not 2k+1.
  PathFunction(OrientedPath path, std::vector<Rational> values);
  // On the standard path with ids 0..k.
  explicit PathFunction(std::vector<Rational> values);

  std::size_t vertex_count() const { return path.vertex_count(); }
  DiscreteMorseFunction as_dmf() const;

  friend bool operator==(const PathFunction&, const PathFunction&) = default;
};

PathFunction make_path_function(std::initializer_list<long long> values);

// Converts a function on a tree that happens to be a path. The orientation is
// the one chosen by as_oriented_path().
std::optional<PathFunction> as_path_function(const DiscreteMorseFunction& f);

enum class ViolationKind {
  weakly_increasing,  // first is a vertex of edge second, f(first) > f(second)
  multiplicity,       // three simplices first, second, third share `value`
  matching,           // first and second share a value but are not incident
};

struct Violation {
  ViolationKind kind;
  SimplexId first;
  SimplexId second;
  std::optional<SimplexId> third;
  Rational value;

  std::string name() const;
  std::string describe(const SimplicialTree& complex) const;
};

class MorseViolation : public std::runtime_error {
 public:
  MorseViolation(Violation violation, const SimplicialTree& complex);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

struct CriticalData {
  std::vector<bool> critical;  // indexed by simplex
  std::vector<SimplexId> critical_simplices;
  std::vector<std::pair<SimplexId, SimplexId>> matched_pairs;  // (vertex, edge)
  std::vector<Rational> critical_values;                       // ascending
  std::vector<Rational> critical_vertex_values;                // ascending
  std::vector<Rational> critical_edge_values;                  // ascending

  bool is_critical(SimplexId s) const { return critical[s]; }
  bool all_critical() const { return matched_pairs.empty(); }
};

// nullopt iff f is a discrete Morse function. Checks weak increase first,
// then multiplicity, then matching; the first witness found is returned.
std::optional<Violation> find_violation(const DiscreteMorseFunction& f);

// Throws MorseViolation.
CriticalData validate(const DiscreteMorseFunction& f);

bool is_index_ordered(const DiscreteMorseFunction& f);
bool is_sublevel_connected(const DiscreteMorseFunction& f);
bool is_all_critical(const DiscreteMorseFunction& f);

// Simplices with value <= a.
Subcomplex sublevel_complex(const DiscreteMorseFunction& f, const Rational& a);
// Simplices with value < a. This is the level "a minus epsilon".
Subcomplex strict_sublevel_complex(const DiscreteMorseFunction& f, const Rational& a);

// The simplex of smallest value in a non-empty subcomplex of f's complex.
// Throws std::invalid_argument on an empty subcomplex.
SimplexId min_simplex(const DiscreteMorseFunction& f, const Subcomplex& component);

// File formats. A path file is one line of 2k+1 values; a tree file has
// "v <id> <value>" and "e <id1> <id2> <value>" lines. '#' starts a comment.
struct LoadedFunction {
  DiscreteMorseFunction function;
  std::optional<PathFunction> path;  // set when read from a path file
};

LoadedFunction parse_function(std::string_view text);  // throws InputError
PathFunction parse_path_function(std::string_view text);
std::string format_path_function(const PathFunction& f);
std::string format_tree_function(const DiscreteMorseFunction& f);

}  // namespace morsetree
