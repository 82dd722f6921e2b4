#pragma once

// Finite simple undirected graphs on vertices 0..n-1.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace motifspec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph. Adjacency lists are sorted and
// symmetric; there are no self-loops.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list. Duplicate edges (in either
  // orientation) collapse. Throws InvalidArgument on a self-loop or an
  // endpoint outside [0, n).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v < order(); }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  bool has_isolated_vertex() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_complete(const Graph& g);
bool is_regular(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// Disjoint union: vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// A designated vertex subset of a host graph, read as the induced subgraph.
// Holds a pointer to the host; the host must outlive the motif.
class Motif {
 public:
  // Throws InvalidArgument for an empty list, a duplicate or an invalid
  // index.
  Motif(const Graph& host, std::vector<Vertex> vertices);

  const Graph& host() const { return *host_; }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Vertex vertex(std::size_t alpha) const { return vertices_.at(alpha); }

  bool contains(Vertex v) const;
  // Position alpha of host vertex v in the motif, or size() if absent.
  std::size_t position(Vertex v) const;

  // Host edges with both endpoints in the motif, as host vertex pairs (u < v).
  std::vector<Edge> internal_edges() const;
  // Internal edges in motif-local positions (alpha < beta).
  std::vector<Edge> local_edges() const;
  // {p not in motif : p ~ p_alpha}, sorted.
  std::vector<Vertex> external_neighbors(std::size_t alpha) const;
  // Degrees of the members taken in the host.
  std::vector<std::size_t> host_degrees() const;

 private:
  const Graph* host_;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> position_;  // host vertex -> alpha, or size()
};

inline Motif induced_motif(const Graph& g, std::vector<Vertex> vertices) {
  return Motif(g, std::move(vertices));
}

// Where each pre-operation vertex lands, and which vertices each round of an
// operation created.
struct VertexMap {
  std::vector<Vertex> image;                  // original index -> output index
  std::vector<std::vector<Vertex>> created;   // new vertices per round

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

struct DuplicateClasses {
  // Classes of vertices with equal open neighborhoods, each sorted, ordered
  // by smallest member. Singletons included.
  std::vector<std::vector<Vertex>> classes;
  // sum over classes of (|class| - 1): a lower bound on m_1.
  std::size_t eigenvalue_one_bound = 0;
};

DuplicateClasses duplicate_vertex_classes(const Graph& g);

}  // namespace motifspec
