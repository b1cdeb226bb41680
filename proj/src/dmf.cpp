#include "morsetree/dmf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "morsetree/error.hpp"
#include "text.hpp"

namespace morsetree {

DiscreteMorseFunction::DiscreteMorseFunction(SimplicialTree complex, std::vector<Rational> values)
    : complex_(std::move(complex)), values_(std::move(values)) {
  if (values_.size() != complex_.simplex_count())
    throw std::invalid_argument("expected " + std::to_string(complex_.simplex_count()) +
                                " values, got " + std::to_string(values_.size()));
}

PathFunction::PathFunction(OrientedPath p, std::vector<Rational> v)
    : path(std::move(p)), values(std::move(v)) {
  if (values.size() != path.simplex_count())
    throw std::invalid_argument("a path with " + std::to_string(path.vertex_count()) +
                                " vertices needs " + std::to_string(path.simplex_count()) +
                                " values, got " + std::to_string(values.size()));
}

namespace {
std::size_t vertices_for(std::size_t values) { return values == 0 ? 1 : (values + 1) / 2; }
}  // namespace

PathFunction::PathFunction(std::vector<Rational> v)
    : path(OrientedPath::standard(vertices_for(v.size()))), values(std::move(v)) {
  if (values.size() != path.simplex_count())
    throw std::invalid_argument("a path function needs an odd number of values, got " +
                                std::to_string(values.size()));
}

DiscreteMorseFunction PathFunction::as_dmf() const {
  SimplicialTree t = path.tree();
  std::vector<Rational> by_simplex(t.simplex_count());
  auto order = path.simplex_sequence();
  for (std::size_t j = 0; j < order.size(); ++j) by_simplex[order[j]] = values[j];
  return DiscreteMorseFunction(std::move(t), std::move(by_simplex));
}

PathFunction make_path_function(std::initializer_list<long long> values) {
  std::vector<Rational> v;
  for (long long x : values) v.emplace_back(x);
  return PathFunction(std::move(v));
}

std::optional<PathFunction> as_path_function(const DiscreteMorseFunction& f) {
  auto path = as_oriented_path(f.complex());
  if (!path) return std::nullopt;
  SimplicialTree t = path->tree();
  std::vector<Rational> values;
  for (SimplexId s : path->simplex_sequence()) {
    // same vertex ids, so translate through ids
    if (t.is_vertex(s)) {
      values.push_back(f.value(*f.complex().find_vertex(t.vertex_id(s))));
    } else {
      const Edge& e = t.edge(s);
      values.push_back(f.value(*f.complex().find_edge(e.a, e.b)));
    }
  }
  return PathFunction(std::move(*path), std::move(values));
}

std::string Violation::name() const {
  switch (kind) {
    case ViolationKind::weakly_increasing: return "WeaklyIncreasingViolation";
    case ViolationKind::multiplicity: return "MultiplicityViolation";
    case ViolationKind::matching: return "MatchingViolation";
  }
  return "Violation";
}

std::string Violation::describe(const SimplicialTree& c) const {
  switch (kind) {
    case ViolationKind::weakly_increasing:
      return name() + ": " + c.simplex_name(first) + " is a face of " + c.simplex_name(second) +
             " but has the larger value";
    case ViolationKind::multiplicity:
      return name() + ": value " + to_string(value) + " is taken by " + c.simplex_name(first) +
             ", " + c.simplex_name(second) + " and " + c.simplex_name(*third);
    case ViolationKind::matching:
      return name() + ": " + c.simplex_name(first) + " and " + c.simplex_name(second) +
             " share value " + to_string(value) + " but are not incident";
  }
  return name();
}

MorseViolation::MorseViolation(Violation violation, const SimplicialTree& complex)
    : std::runtime_error(violation.describe(complex)), violation_(std::move(violation)) {}

namespace {

// Simplex ids sorted by value, ties by id.
std::vector<SimplexId> by_value(const DiscreteMorseFunction& f) {
  std::vector<SimplexId> order(f.values().size());
  std::iota(order.begin(), order.end(), SimplexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](SimplexId a, SimplexId b) { return less(f.value(a), f.value(b)); });
  return order;
}

}  // namespace

std::optional<Violation> find_violation(const DiscreteMorseFunction& f) {
  const SimplicialTree& t = f.complex();
  for (SimplexId e = t.vertex_count(); e < t.simplex_count(); ++e)
    for (SimplexId v : t.faces(e))
      if (less(f.value(e), f.value(v)))
        return Violation{ViolationKind::weakly_increasing, v, e, std::nullopt, f.value(v)};

  auto order = by_value(f);
  for (std::size_t i = 0; i + 2 < order.size(); ++i)
    if (equal(f.value(order[i]), f.value(order[i + 2])))
      return Violation{ViolationKind::multiplicity, order[i], order[i + 1], order[i + 2],
                       f.value(order[i])};
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (equal(f.value(order[i]), f.value(order[i + 1])) && !t.incident(order[i], order[i + 1]))
      return Violation{ViolationKind::matching, order[i], order[i + 1], std::nullopt,
                       f.value(order[i])};
  return std::nullopt;
}

CriticalData validate(const DiscreteMorseFunction& f) {
  if (auto v = find_violation(f)) throw MorseViolation(*v, f.complex());
  const SimplicialTree& t = f.complex();
  CriticalData data;
  data.critical.assign(t.simplex_count(), true);
  auto order = by_value(f);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!equal(f.value(order[i]), f.value(order[i + 1]))) continue;
    SimplexId a = order[i], b = order[i + 1];
    if (t.is_edge(a)) std::swap(a, b);
    data.matched_pairs.emplace_back(a, b);
    data.critical[a] = data.critical[b] = false;
  }
  std::sort(data.matched_pairs.begin(), data.matched_pairs.end());
  for (SimplexId s : order) {
    if (!data.critical[s]) continue;
    data.critical_values.push_back(f.value(s));
    (t.is_vertex(s) ? data.critical_vertex_values : data.critical_edge_values).push_back(f.value(s));
  }
  for (SimplexId s = 0; s < t.simplex_count(); ++s)
    if (data.critical[s]) data.critical_simplices.push_back(s);
  return data;
}

bool is_index_ordered(const DiscreteMorseFunction& f) {
  CriticalData d = validate(f);
  if (d.critical_vertex_values.empty() || d.critical_edge_values.empty()) return true;
  return d.critical_vertex_values.back() < d.critical_edge_values.front();
}

bool is_sublevel_connected(const DiscreteMorseFunction& f) {
  CriticalData d = validate(f);
  const SimplicialTree& t = f.complex();
  for (SimplexId e = t.vertex_count(); e < t.simplex_count(); ++e) {
    if (!d.is_critical(e)) continue;
    Subcomplex level = sublevel_complex(f, f.value(e));
    Subcomplex comp = connected_component(level, e);
    std::vector<std::size_t> ranks;
    for (SimplexId s : comp.simplices()) {
      if (!d.is_critical(s)) continue;
      auto it = std::lower_bound(d.critical_values.begin(), d.critical_values.end(), f.value(s), RationalLess{});
      ranks.push_back(static_cast<std::size_t>(it - d.critical_values.begin()));
    }
    std::sort(ranks.begin(), ranks.end());
    if (ranks.back() - ranks.front() + 1 != ranks.size()) return false;
  }
  return true;
}

bool is_all_critical(const DiscreteMorseFunction& f) { return validate(f).all_critical(); }

Subcomplex sublevel_complex(const DiscreteMorseFunction& f, const Rational& a) {
  std::vector<bool> in(f.values().size());
  for (SimplexId s = 0; s < in.size(); ++s) in[s] = !less(a, f.value(s));
  return Subcomplex(f.complex(), std::move(in));
}

Subcomplex strict_sublevel_complex(const DiscreteMorseFunction& f, const Rational& a) {
  std::vector<bool> in(f.values().size());
  for (SimplexId s = 0; s < in.size(); ++s) in[s] = less(f.value(s), a);
  return Subcomplex(f.complex(), std::move(in));
}

SimplexId min_simplex(const DiscreteMorseFunction& f, const Subcomplex& component) {
  std::optional<SimplexId> best;
  for (SimplexId s : component.simplices())
    if (!best || less(f.value(s), f.value(*best))) best = s;
  if (!best) throw std::invalid_argument("min_simplex of an empty subcomplex");
  return *best;
}

LoadedFunction parse_function(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw InputError("no values found", 1, 1);
  const auto& head = lines.front().front();
  if (head.text != "v" && head.text != "e") {
    PathFunction p = parse_path_function(text);
    DiscreteMorseFunction f = p.as_dmf();
    return LoadedFunction{std::move(f), std::move(p)};
  }
  std::map<VertexId, Rational> vertex_values;
  std::map<Edge, Rational> edge_values;
  for (const auto& line : lines) {
    const auto& tok = line.front();
    if (tok.text == "v") {
      if (line.size() != 3) throw InputError("expected 'v <id> <value>'", tok.line, tok.column);
      VertexId id = detail::unsigned_token(line[1]);
      if (!vertex_values.emplace(id, detail::rational_token(line[2])).second)
        throw InputError("vertex " + std::to_string(id) + " listed twice", tok.line, tok.column);
    } else if (tok.text == "e") {
      if (line.size() != 4)
        throw InputError("expected 'e <id1> <id2> <value>'", tok.line, tok.column);
      VertexId a = detail::unsigned_token(line[1]);
      VertexId b = detail::unsigned_token(line[2]);
      if (a == b) throw InputError("loop at vertex " + std::to_string(a), tok.line, tok.column);
      Edge e{std::min(a, b), std::max(a, b)};
      if (!edge_values.emplace(e, detail::rational_token(line[3])).second)
        throw InputError("edge listed twice", tok.line, tok.column);
    } else {
      throw InputError("expected 'v' or 'e', got '" + std::string(tok.text) + "'", tok.line,
                       tok.column);
    }
  }
  std::vector<VertexId> vertices;
  for (const auto& [v, value] : vertex_values) vertices.push_back(v);
  std::vector<Edge> edges;
  for (const auto& [e, value] : edge_values) edges.push_back(e);
  try {
    SimplicialTree tree(std::move(vertices), std::move(edges));
    std::vector<Rational> values;
    for (const auto& [v, value] : vertex_values) values.push_back(value);
    for (const auto& [e, value] : edge_values) values.push_back(value);
    return LoadedFunction{DiscreteMorseFunction(std::move(tree), std::move(values)), std::nullopt};
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

PathFunction parse_path_function(std::string_view text) {
  std::vector<Rational> values;
  auto lines = detail::tokenize_lines(text);
  if (lines.size() > 1)
    throw InputError("a path function is a single line of values", lines[1].front().line,
                     lines[1].front().column);
  if (lines.empty()) throw InputError("no values found", 1, 1);
  for (const auto& tok : lines.front()) values.push_back(detail::rational_token(tok));
  if (values.size() % 2 == 0) {
    const auto& last = lines.front().back();
    throw InputError("expected an odd number of values (vertex, edge, ..., vertex), got " +
                         std::to_string(values.size()),
                     last.line, last.column);
  }
  return PathFunction(std::move(values));
}

std::string format_path_function(const PathFunction& f) {
  std::string out;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) out += ' ';
    out += to_string(f.values[i]);
  }
  return out + "\n";
}

std::string format_tree_function(const DiscreteMorseFunction& f) {
  const SimplicialTree& t = f.complex();
  std::string out;
  for (SimplexId v = 0; v < t.vertex_count(); ++v)
    out += "v " + std::to_string(t.vertex_id(v)) + " " + to_string(f.value(v)) + "\n";
  for (SimplexId e = t.vertex_count(); e < t.simplex_count(); ++e)
    out += "e " + std::to_string(t.edge(e).a) + " " + std::to_string(t.edge(e).b) + " " +
           to_string(f.value(e)) + "\n";
  return out;
}

}  // namespace morsetree
