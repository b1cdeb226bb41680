#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morsetree {

using VertexId = std::uint64_t;

// Simplices of a complex are numbered densely: vertices first (in ascending
// vertex id order), then edges (in ascending (min,max) order).
using SimplexId = std::size_t;

struct Edge {
  VertexId a;  // a < b
  VertexId b;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A finite tree viewed as a 1-dimensional simplicial complex. Immutable;
// copies share storage.
class SimplicialTree {
 public:
  // Throws std::invalid_argument unless the graph is a non-empty simple tree.
  SimplicialTree(std::vector<VertexId> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return data_->vertices.size(); }
  std::size_t edge_count() const { return data_->edges.size(); }
  std::size_t simplex_count() const { return vertex_count() + edge_count(); }

  const std::vector<VertexId>& vertices() const { return data_->vertices; }
  const std::vector<Edge>& edges() const { return data_->edges; }

  bool is_vertex(SimplexId s) const { return s < vertex_count(); }
  bool is_edge(SimplexId s) const { return s >= vertex_count() && s < simplex_count(); }
  int dimension(SimplexId s) const { return is_vertex(s) ? 0 : 1; }

  SimplexId vertex_simplex(std::size_t i) const { return i; }
  SimplexId edge_simplex(std::size_t j) const { return vertex_count() + j; }
  VertexId vertex_id(SimplexId vertex) const { return data_->vertices[vertex]; }
  const Edge& edge(SimplexId edge) const { return data_->edges[edge - vertex_count()]; }

  std::optional<SimplexId> find_vertex(VertexId v) const;
  std::optional<SimplexId> find_edge(VertexId u, VertexId v) const;

  // The two vertex simplices of an edge simplex.
  const std::array<SimplexId, 2>& faces(SimplexId edge) const {
    return data_->faces[edge - vertex_count()];
  }
  // Edge simplices containing a vertex simplex, ascending.
  const std::vector<SimplexId>& cofaces(SimplexId vertex) const { return data_->cofaces[vertex]; }
  std::size_t degree(SimplexId vertex) const { return cofaces(vertex).size(); }

  bool incident(SimplexId s, SimplexId t) const;

  // "v3" or "e{1,2}"
  std::string simplex_name(SimplexId s) const;

  friend bool operator==(const SimplicialTree& x, const SimplicialTree& y) {
    return x.data_ == y.data_ || (x.vertices() == y.vertices() && x.edges() == y.edges());
  }

 private:
  struct Data {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    std::vector<std::array<SimplexId, 2>> faces;
    std::vector<std::vector<SimplexId>> cofaces;
  };
  std::shared_ptr<const Data> data_;
};

// A path together with a left-to-right orientation v0, ..., vk.
class OrientedPath {
 public:
  // Throws std::invalid_argument on an empty or repeating sequence.
  explicit OrientedPath(std::vector<VertexId> sequence);

  // The path 0 - 1 - ... - (n-1).
  static OrientedPath standard(std::size_t vertex_count);

  const std::vector<VertexId>& sequence() const { return sequence_; }
  std::size_t vertex_count() const { return sequence_.size(); }
  std::size_t edge_count() const { return sequence_.size() - 1; }
  std::size_t simplex_count() const { return 2 * sequence_.size() - 1; }

  SimplicialTree tree() const;
  OrientedPath reversed() const;

  // Simplex ids of tree(), listed left to right: v0, e01, v1, e12, ...
  std::vector<SimplexId> simplex_sequence() const;

  friend bool operator==(const OrientedPath&, const OrientedPath&) = default;

 private:
  std::vector<VertexId> sequence_;
};

// Returns the vertex sequence if the tree is a path, starting at the endpoint
// with the smaller vertex id.
std::optional<OrientedPath> as_oriented_path(const SimplicialTree& tree);

// A face-closed set of simplices of some tree. Holds a pointer to the parent,
// which must outlive it.
class Subcomplex {
 public:
  // Throws std::invalid_argument if the set is not face-closed.
  Subcomplex(const SimplicialTree& parent, std::vector<bool> members);

  static Subcomplex empty(const SimplicialTree& parent);
  static Subcomplex full(const SimplicialTree& parent);

  const SimplicialTree& parent() const { return *parent_; }
  bool contains(SimplexId s) const { return s < members_.size() && members_[s]; }
  const std::vector<bool>& members() const { return members_; }
  std::vector<SimplexId> simplices() const;
  std::size_t size() const;
  bool is_empty() const { return size() == 0; }

  bool subset_of(const Subcomplex& other) const;

  friend bool operator==(const Subcomplex& x, const Subcomplex& y) {
    return x.parent() == y.parent() && x.members_ == y.members_;
  }

 private:
  const SimplicialTree* parent_;
  std::vector<bool> members_;
};

// The connected component of the complex containing the given simplex.
// Throws std::invalid_argument if the simplex is not present.
Subcomplex connected_component(const SimplicialTree& tree, SimplexId s);
Subcomplex connected_component(const Subcomplex& complex, SimplexId s);

// All components, ordered by their smallest simplex id.
std::vector<Subcomplex> connected_components(const Subcomplex& complex);

// Tree file format: lines "v <id>" and "e <id1> <id2>", '#' starts a comment.
SimplicialTree parse_tree(std::string_view text);
std::string format_tree(const SimplicialTree& tree);

}  // namespace morsetree
