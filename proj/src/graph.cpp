#include "motifspec/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "motifspec/errors.hpp"

namespace motifspec {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += nbrs.size();
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order());
  for (Vertex v = 0; v < order(); ++v) d[v] = adjacency_[v].size();
  return d;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& nbrs) { return nbrs.empty(); });
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> frontier;
    frontier.push(s);
    seen[s] = true;
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          frontier.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          frontier.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_regular(const Graph& g) {
  if (g.order() == 0) return true;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const std::size_t offset = a.order();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph::from_edges(a.order() + b.order(), edges);
}

Motif::Motif(const Graph& host, std::vector<Vertex> vertices)
    : host_(&host), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidArgument("motif is empty");
  position_.assign(host.order(), vertices_.size());
  for (std::size_t alpha = 0; alpha < vertices_.size(); ++alpha) {
    const Vertex v = vertices_[alpha];
    if (!host.contains(v)) {
      throw InvalidArgument("motif vertex " + std::to_string(v) + " is not in the host graph");
    }
    if (position_[v] != vertices_.size()) {
      throw InvalidArgument("motif vertex " + std::to_string(v) + " listed twice");
    }
    position_[v] = alpha;
  }
}

bool Motif::contains(Vertex v) const { return v < position_.size() && position_[v] != size(); }

std::size_t Motif::position(Vertex v) const { return v < position_.size() ? position_[v] : size(); }

std::vector<Edge> Motif::internal_edges() const {
  std::vector<Edge> out;
  for (Vertex u : vertices_) {
    for (Vertex v : host_->neighbors(u)) {
      if (u < v && contains(v)) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Motif::local_edges() const {
  std::vector<Edge> out;
  for (std::size_t alpha = 0; alpha < size(); ++alpha) {
    for (Vertex v : host_->neighbors(vertices_[alpha])) {
      const std::size_t beta = position(v);
      if (beta != size() && alpha < beta) out.emplace_back(alpha, beta);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> Motif::external_neighbors(std::size_t alpha) const {
  std::vector<Vertex> out;
  for (Vertex v : host_->neighbors(vertices_.at(alpha))) {
    if (!contains(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> Motif::host_degrees() const {
  std::vector<std::size_t> d;
  d.reserve(size());
  for (Vertex v : vertices_) d.push_back(host_->degree(v));
  return d;
}

DuplicateClasses duplicate_vertex_classes(const Graph& g) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_neighborhood;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nbrs = g.neighbors(v);
    by_neighborhood[std::vector<Vertex>(nbrs.begin(), nbrs.end())].push_back(v);
  }
  DuplicateClasses out;
  for (auto& [nbrs, members] : by_neighborhood) {
    out.eigenvalue_one_bound += members.size() - 1;
    out.classes.push_back(std::move(members));
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

}  // namespace motifspec
