#include "morsetree/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "morsetree/error.hpp"
#include "text.hpp"

namespace morsetree {

SimplicialTree::SimplicialTree(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  if (vertices.empty()) throw std::invalid_argument("a tree needs at least one vertex");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex id");
  for (auto& e : edges) {
    if (e.a == e.b) throw std::invalid_argument("loop at vertex " + std::to_string(e.a));
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  if (edges.size() + 1 != vertices.size())
    throw std::invalid_argument("a tree with " + std::to_string(vertices.size()) +
                                " vertices needs " + std::to_string(vertices.size() - 1) +
                                " edges, got " + std::to_string(edges.size()));

  auto data = std::make_shared<Data>();
  data->vertices = std::move(vertices);
  data->edges = std::move(edges);
  const std::size_t n = data->vertices.size();
  data->cofaces.resize(n);
  auto index = [&](VertexId v) -> SimplexId {
    auto it = std::lower_bound(data->vertices.begin(), data->vertices.end(), v);
    if (it == data->vertices.end() || *it != v)
      throw std::invalid_argument("edge uses unknown vertex " + std::to_string(v));
    return static_cast<SimplexId>(it - data->vertices.begin());
  };
  // union-find for the cycle check
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t j = 0; j < data->edges.size(); ++j) {
    SimplexId a = index(data->edges[j].a);
    SimplexId b = index(data->edges[j].b);
    data->faces.push_back({a, b});
    data->cofaces[a].push_back(n + j);
    data->cofaces[b].push_back(n + j);
    auto ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("graph has a cycle");
    root[ra] = rb;
  }
  data_ = std::move(data);
}

std::optional<SimplexId> SimplicialTree::find_vertex(VertexId v) const {
  auto it = std::lower_bound(vertices().begin(), vertices().end(), v);
  if (it == vertices().end() || *it != v) return std::nullopt;
  return static_cast<SimplexId>(it - vertices().begin());
}

std::optional<SimplexId> SimplicialTree::find_edge(VertexId u, VertexId v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges().begin(), edges().end(), e);
  if (it == edges().end() || *it != e) return std::nullopt;
  return vertex_count() + static_cast<SimplexId>(it - edges().begin());
}

bool SimplicialTree::incident(SimplexId s, SimplexId t) const {
  if (is_vertex(s) && is_edge(t)) return faces(t)[0] == s || faces(t)[1] == s;
  if (is_edge(s) && is_vertex(t)) return incident(t, s);
  return false;
}

std::string SimplicialTree::simplex_name(SimplexId s) const {
  if (is_vertex(s)) return "v" + std::to_string(vertex_id(s));
  const Edge& e = edge(s);
  return "e{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

OrientedPath::OrientedPath(std::vector<VertexId> sequence) : sequence_(std::move(sequence)) {
  if (sequence_.empty()) throw std::invalid_argument("a path needs at least one vertex");
  auto sorted = sequence_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("a path visits each vertex once");
}

OrientedPath OrientedPath::standard(std::size_t vertex_count) {
  std::vector<VertexId> seq(vertex_count);
  std::iota(seq.begin(), seq.end(), VertexId{0});
  return OrientedPath(std::move(seq));
}

SimplicialTree OrientedPath::tree() const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < sequence_.size(); ++i)
    edges.push_back({sequence_[i], sequence_[i + 1]});
  return SimplicialTree(sequence_, std::move(edges));
}

OrientedPath OrientedPath::reversed() const {
  return OrientedPath(std::vector<VertexId>(sequence_.rbegin(), sequence_.rend()));
}

std::vector<SimplexId> OrientedPath::simplex_sequence() const {
  SimplicialTree t = tree();
  std::vector<SimplexId> out;
  out.reserve(simplex_count());
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    if (i > 0) out.push_back(*t.find_edge(sequence_[i - 1], sequence_[i]));
    out.push_back(*t.find_vertex(sequence_[i]));
  }
  return out;
}

std::optional<OrientedPath> as_oriented_path(const SimplicialTree& tree) {
  if (tree.vertex_count() == 1) return OrientedPath({tree.vertex_id(0)});
  std::optional<SimplexId> start;
  for (SimplexId v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) > 2) return std::nullopt;
    if (tree.degree(v) == 1 && !start) start = v;
  }
  std::vector<VertexId> seq;
  SimplexId prev_edge = tree.simplex_count();
  SimplexId v = *start;
  for (;;) {
    seq.push_back(tree.vertex_id(v));
    SimplexId next_edge = tree.simplex_count();
    for (SimplexId e : tree.cofaces(v))
      if (e != prev_edge) next_edge = e;
    if (next_edge == tree.simplex_count()) break;
    const auto& f = tree.faces(next_edge);
    v = f[0] == v ? f[1] : f[0];
    prev_edge = next_edge;
  }
  return OrientedPath(std::move(seq));
}

Subcomplex::Subcomplex(const SimplicialTree& parent, std::vector<bool> members)
    : parent_(&parent), members_(std::move(members)) {
  if (members_.size() != parent.simplex_count())
    throw std::invalid_argument("subcomplex membership has the wrong size");
  for (SimplexId e = parent.vertex_count(); e < parent.simplex_count(); ++e) {
    if (!members_[e]) continue;
    for (SimplexId v : parent.faces(e))
      if (!members_[v])
        throw std::invalid_argument("not face-closed: " + parent.simplex_name(e) +
                                    " without " + parent.simplex_name(v));
  }
}

Subcomplex Subcomplex::empty(const SimplicialTree& parent) {
  return Subcomplex(parent, std::vector<bool>(parent.simplex_count(), false));
}

Subcomplex Subcomplex::full(const SimplicialTree& parent) {
  return Subcomplex(parent, std::vector<bool>(parent.simplex_count(), true));
}

std::vector<SimplexId> Subcomplex::simplices() const {
  std::vector<SimplexId> out;
  for (SimplexId s = 0; s < members_.size(); ++s)
    if (members_[s]) out.push_back(s);
  return out;
}

std::size_t Subcomplex::size() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

bool Subcomplex::subset_of(const Subcomplex& other) const {
  for (SimplexId s = 0; s < members_.size(); ++s)
    if (members_[s] && !other.contains(s)) return false;
  return true;
}

Subcomplex connected_component(const Subcomplex& complex, SimplexId s) {
  const SimplicialTree& t = complex.parent();
  if (!complex.contains(s))
    throw std::invalid_argument("simplex " + (s < t.simplex_count() ? t.simplex_name(s) : std::to_string(s)) +
                                " is not in the complex");
  std::vector<bool> in(t.simplex_count(), false);
  std::vector<SimplexId> stack;
  SimplexId start = t.is_vertex(s) ? s : t.faces(s)[0];
  in[start] = true;
  stack.push_back(start);
  while (!stack.empty()) {
    SimplexId v = stack.back();
    stack.pop_back();
    for (SimplexId e : t.cofaces(v)) {
      if (!complex.contains(e) || in[e]) continue;
      in[e] = true;
      for (SimplexId w : t.faces(e))
        if (!in[w]) {
          in[w] = true;
          stack.push_back(w);
        }
    }
  }
  return Subcomplex(t, std::move(in));
}

Subcomplex connected_component(const SimplicialTree& tree, SimplexId s) {
  if (s >= tree.simplex_count()) throw std::invalid_argument("simplex is not in the complex");
  // The whole tree is connected.
  return Subcomplex::full(tree);
}

std::vector<Subcomplex> connected_components(const Subcomplex& complex) {
  const SimplicialTree& t = complex.parent();
  std::vector<bool> seen(t.simplex_count(), false);
  std::vector<Subcomplex> out;
  for (SimplexId v = 0; v < t.vertex_count(); ++v) {
    if (!complex.contains(v) || seen[v]) continue;
    Subcomplex c = connected_component(complex, v);
    for (SimplexId s : c.simplices()) seen[s] = true;
    out.push_back(std::move(c));
  }
  return out;
}

SimplicialTree parse_tree(std::string_view text) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (const auto& line : detail::tokenize_lines(text)) {
    const auto& head = line.front();
    if (head.text == "v") {
      if (line.size() != 2) throw InputError("expected 'v <id>'", head.line, head.column);
      vertices.push_back(detail::unsigned_token(line[1]));
    } else if (head.text == "e") {
      if (line.size() != 3) throw InputError("expected 'e <id1> <id2>'", head.line, head.column);
      edges.push_back({detail::unsigned_token(line[1]), detail::unsigned_token(line[2])});
    } else {
      throw InputError("expected 'v' or 'e', got '" + std::string(head.text) + "'", head.line,
                       head.column);
    }
  }
  try {
    return SimplicialTree(std::move(vertices), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string format_tree(const SimplicialTree& tree) {
  std::string out;
  for (VertexId v : tree.vertices()) out += "v " + std::to_string(v) + "\n";
  for (const Edge& e : tree.edges()) out += "e " + std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

}  // namespace morsetree
