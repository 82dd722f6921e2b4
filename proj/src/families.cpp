#include "motifspec/families.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "motifspec/errors.hpp"

namespace motifspec {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kNames{{
    {Family::kComplete, "complete"},
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kStar, "star"},
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kKite, "kite"},
    {Family::kStarOfTriangles, "star_of_triangles"},
    {Family::kErdosRenyi, "erdos_renyi"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

ExpectedEigenvalue exact(std::int64_t num, std::int64_t den, std::size_t mult) {
  const Rational r(num, den);
  return {r.value(), r, mult};
}

// Folds equal values (cos-based families repeat eigenvalues).
void add_value(ExpectedSpectrum& s, double value) {
  for (auto& e : s.entries) {
    if (std::fabs(e.value - value) <= 1e-12) {
      ++e.multiplicity;
      return;
    }
  }
  s.entries.push_back({value, recognize_rational(value, 64, 1e-12), 1});
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [value, name] : kNames) {
    if (value == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [value, n] : kNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

std::size_t ExpectedSpectrum::listed() const {
  std::size_t total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) { return complete_bipartite_graph(1, leaves); }

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph::from_edges(a + b, edges);
}

Graph kite_graph(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 1, "kite parameters must be at least 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= m + n; ++v) edges.emplace_back(0, v);
  for (Vertex u = 1; u <= m; ++u) {
    for (Vertex v = u + 1; v <= m; ++v) edges.emplace_back(u, v);
  }
  for (Vertex u = m + 1; u <= m + n; ++u) {
    for (Vertex v = u + 1; v <= m + n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(m + n + 1, edges);
}

Graph star_of_triangles(std::size_t triangles) {
  require(triangles >= 1, "star of triangles needs at least one triangle");
  std::vector<Edge> edges;
  for (std::size_t t = 1; t <= triangles; ++t) {
    edges.emplace_back(0, 2 * t - 1);
    edges.emplace_back(0, 2 * t);
    edges.emplace_back(2 * t - 1, 2 * t);
  }
  return Graph::from_edges(2 * triangles + 1, edges);
}

Graph random_connected(std::size_t n, double edge_prob, std::uint64_t seed) {
  require(n >= 1, "random graph needs at least one vertex");
  require(edge_prob > 0.0 && edge_prob <= 1.0, "edge probability must lie in (0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  auto comps = connected_components(Graph::from_edges(n, edges));
  // Join component c to a random vertex of components 0..c-1.
  std::vector<Vertex> earlier = comps.front();
  for (std::size_t c = 1; c < comps.size(); ++c) {
    std::uniform_int_distribution<std::size_t> pick_old(0, earlier.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_new(0, comps[c].size() - 1);
    edges.emplace_back(earlier[pick_old(rng)], comps[c][pick_new(rng)]);
    earlier.insert(earlier.end(), comps[c].begin(), comps[c].end());
  }
  return Graph::from_edges(n, edges);
}

GeneratedGraph generate(const FamilySpec& spec) {
  GeneratedGraph out;
  auto& e = out.expected;
  const std::size_t n = spec.n;
  const auto i64 = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  switch (spec.family) {
    case Family::kComplete:
      require(n >= 2, "complete graph needs n >= 2");
      out.graph = complete_graph(n);
      e.entries = {exact(0, 1, 1), exact(i64(n), i64(n) - 1, n - 1)};
      e.full = true;
      break;
    case Family::kPath:
      require(n >= 2, "path needs n >= 2");
      out.graph = path_graph(n);
      for (std::size_t k = 0; k < n; ++k) {
        add_value(e, 1.0 - std::cos(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n - 1)));
      }
      e.full = true;
      break;
    case Family::kCycle:
      require(n >= 3, "cycle needs n >= 3");
      out.graph = cycle_graph(n);
      for (std::size_t k = 0; k < n; ++k) {
        add_value(e, 1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
      }
      e.full = true;
      break;
    case Family::kStar:
      require(n >= 1, "star needs at least one leaf");
      out.graph = star_graph(n);
      e.entries = {exact(0, 1, 1), exact(2, 1, 1)};
      if (n >= 2) e.entries.insert(e.entries.begin() + 1, exact(1, 1, n - 1));
      e.full = true;
      break;
    case Family::kCompleteBipartite:
      require(spec.m >= 1 && n >= 1, "complete bipartite parts must be non-empty");
      out.graph = complete_bipartite_graph(spec.m, n);
      e.entries = {exact(0, 1, 1), exact(2, 1, 1)};
      if (spec.m + n > 2) e.entries.insert(e.entries.begin() + 1, exact(1, 1, spec.m + n - 2));
      e.full = true;
      break;
    case Family::kKite: {
      const std::size_t m = spec.m;
      require(m >= 1 && n >= 1, "kite parameters must be at least 1");
      out.graph = kite_graph(m, n);
      e.entries.push_back(exact(0, 1, 1));
      if (m == n) {
        e.entries.push_back(exact(i64(m) + 1, i64(m), 2 * m - 1));
        e.entries.push_back(exact(1, i64(m), 1));
        e.full = true;
      } else {
        if (m > 1) e.entries.push_back(exact(i64(m) + 1, i64(m), m - 1));
        if (n > 1) e.entries.push_back(exact(i64(n) + 1, i64(n), n - 1));
        e.residual_pair_sum = 1.0 + 1.0 / static_cast<double>(m) + 1.0 / static_cast<double>(n);
      }
      break;
    }
    case Family::kStarOfTriangles:
      require(n >= 1, "star of triangles needs at least one triangle");
      out.graph = star_of_triangles(n);
      e.entries.push_back(exact(0, 1, 1));
      if (n > 1) e.entries.push_back(exact(1, 2, n - 1));
      e.entries.push_back(exact(3, 2, n + 1));
      e.full = true;
      break;
    case Family::kErdosRenyi:
      out.graph = random_connected(n, spec.edge_prob, spec.seed);
      break;
  }
  return out;
}

}  // namespace motifspec
