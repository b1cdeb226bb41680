#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morsetree/dmf.hpp"
#include "morsetree/induce.hpp"
#include "morsetree/orders.hpp"

namespace morsetree {

// ---- labeled trees

enum class LabelMatch {
  order_preserving,  // labels correspond through an increasing bijection
  exact,             // corresponding nodes carry equal labels
};

bool labeled_isomorphic(const MergeTree& a, const Labeling& la, const MergeTree& b,
                        const Labeling& lb, LabelMatch match = LabelMatch::order_preserving);
bool ml_isomorphic(const MlTree& a, const MlTree& b,
                   LabelMatch match = LabelMatch::order_preserving);
// Tree isomorphism whose label correspondence is increasing on leaves and on
// inner nodes separately.
bool ml_shuffle_equivalent(const MlTree& a, const MlTree& b);
bool mo_isomorphic(const MergeTree& a, const MorseOrder& oa, const MergeTree& b,
                   const MorseOrder& ob);

// ---- witnesses

// Reversing the run of path positions [first, last] (a sublevel component at
// `level`).
struct Reflection {
  Rational level;
  std::size_t first = 0;
  std::size_t last = 0;

  friend bool operator==(const Reflection&, const Reflection&) = default;
};

// Edge moved from one endpoint to another vertex while reducing to a path.
struct Reattachment {
  Rational level;       // value of the moved edge
  VertexId kept;        // endpoint that stays
  VertexId detached;    // old endpoint
  VertexId attached;    // new endpoint
};

enum class WitnessKind { shuffle, symmetry, cm };

struct EquivalenceWitness {
  WitnessKind kind = WitnessKind::shuffle;
  // simplex_map[s] = simplex of the second function matched with s.
  std::vector<SimplexId> simplex_map;
  // (value in first, value in second) for the critical cells, ascending.
  std::vector<std::pair<Rational, Rational>> vertex_values;
  std::vector<std::pair<Rational, Rational>> edge_values;
  // symmetry: reflections taking the first path function to the second.
  std::vector<Reflection> reflections;
  // cm: reductions of both inputs to paths, then reflections between them.
  std::vector<Reattachment> first_reduction;
  std::vector<Reattachment> second_reduction;
  bool complete = true;  // false when the search for a replayable witness was cut off

  std::string describe() const;
};

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<EquivalenceWitness> witness;

  explicit operator bool() const { return equivalent; }
};

// ---- shuffle equivalence

// Same complex, identity map.
EquivalenceResult shuffle_equivalent(const DiscreteMorseFunction& f, const DiscreteMorseFunction& g);

enum class PathMatching { identity, allow_reversal };
EquivalenceResult shuffle_equivalent(const PathFunction& f, const PathFunction& g,
                                     PathMatching matching = PathMatching::identity);

// ---- symmetry equivalence (all-critical functions on paths)

// Components of every closed sublevel complex at a critical value, as runs
// of path positions. Single vertices are skipped since they reflect to
// themselves.
std::vector<Reflection> generator_reflections(const PathFunction& f);
PathFunction apply_reflection(const PathFunction& f, const Reflection& r);

// Closure of {f} under generator reflections, sorted by values. Throws
// std::length_error if more than `limit` functions are found.
std::vector<PathFunction> sublevel_orbit(const PathFunction& f, std::size_t limit = 1000000);

// Decided by exact equality of the induced Ml trees. With want_witness a
// reflection sequence is searched in the orbit of f (at most `search_limit`
// functions). Throws UnsupportedRegime if either input has matched cells.
EquivalenceResult symmetry_equivalent(const PathFunction& f, const PathFunction& g,
                                      bool want_witness = false,
                                      std::size_t search_limit = 200000);

// ---- cm equivalence (all-critical functions on trees)

// Repeatedly takes the lowest edge that creates a vertex of degree > 2 in
// its closed sublevel complex and moves that end of it to an endpoint of the
// path component below. Values are kept. Throws UnsupportedRegime on matched
// cells.
PathFunction cm_to_path(const DiscreteMorseFunction& f, std::vector<Reattachment>* log = nullptr);

EquivalenceResult cm_equivalent(const DiscreteMorseFunction& f, const DiscreteMorseFunction& g,
                                bool want_witness = false);

}  // namespace morsetree
