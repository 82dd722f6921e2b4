#include "motifspec/catalog.hpp"

#include <cmath>

#include "motifspec/families.hpp"

namespace motifspec {

namespace {

SpectrumFragment exactly(std::int64_t num, std::int64_t den, std::size_t mult) {
  const Rational r(num, den);
  return {r.value(), r, mult, false};
}

SpectrumFragment at_least(double value, std::size_t mult) {
  return {value, recognize_rational(value, 1000, 1e-12), mult, true};
}

std::vector<double> zeros(std::size_t n) { return std::vector<double>(n, 0.0); }

// Vertex-doubling figure: 6-4, 4-5, 5-1, 1-2, 2-4, 2-3, 3-4 (1-based).
Graph doubling_figure_host() {
  const std::vector<Edge> edges{{5, 3}, {3, 4}, {4, 0}, {0, 1}, {1, 3}, {1, 2}, {2, 3}};
  return Graph::from_edges(6, edges);
}

// Induced path 0 ~ 1 ~ 2 with host degrees (2, 4, 3).
Graph path_motif_host() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}};
  return Graph::from_edges(6, edges);
}

Fixture vertex_doubling_figure() {
  Fixture fx;
  fx.name = "vertex_doubling_twice";
  fx.example = "vertex doubling figure: vertex 5 doubled twice";
  fx.recipe = "double vertex 4 (label 5) of the 6-vertex figure graph, 2 rounds";
  fx.build = [] { return double_vertex_repeated(doubling_figure_host(), 4, 2); };
  std::vector<Edge> edges = doubling_figure_host().edges();
  for (Vertex q : {6u, 7u}) {
    edges.emplace_back(q, 3);
    edges.emplace_back(q, 0);
  }
  fx.expected_graph = Graph::from_edges(8, edges);
  fx.spectrum = {at_least(1.0, 2)};
  auto f1 = zeros(8);
  f1[4] = 1;
  f1[6] = -1;
  auto f2 = zeros(8);
  f2[4] = 1;
  f2[6] = 1;
  f2[7] = -2;
  fx.vectors = {{1.0, f1, true}, {1.0, f2, true}};
  return fx;
}

Fixture edge_doubling_figure() {
  Fixture fx;
  fx.name = "edge_doubling_three_times";
  fx.example = "motif doubling figure: edge (2, 3) of a triangle doubled three times";
  fx.recipe = "double motif {1, 2} of K_3, 3 rounds";
  fx.build = [] {
    const Graph k3 = complete_graph(3);
    return double_motif_repeated(Motif(k3, {1, 2}), 3);
  };
  fx.expected_graph = star_of_triangles(4);
  fx.spectrum = {exactly(0, 1, 1), exactly(1, 2, 3), exactly(3, 2, 5)};
  fx.spectrum_full = true;
  return fx;
}

Fixture star_of_triangles_fixture(std::size_t i) {
  Fixture fx;
  fx.name = "star_of_triangles";
  fx.example = "star of triangles: eigenvalues 0, 0.5, 1.5 and the listed eigenfunctions";
  fx.recipe = "double motif {1, 2} of K_3, " + std::to_string(i - 1) + " rounds (i = " +
              std::to_string(i) + " triangles)";
  fx.build = [i] {
    const Graph k3 = complete_graph(3);
    return double_motif_repeated(Motif(k3, {1, 2}), i - 1);
  };
  fx.expected_graph = star_of_triangles(i);
  fx.spectrum = {exactly(0, 1, 1), exactly(1, 2, i - 1), exactly(3, 2, i + 1)};
  fx.spectrum_full = true;

  const std::size_t n = 2 * i + 1;
  // Triangle t occupies {2t-1, 2t}; triangle 1 is the original motif.
  for (std::size_t j = 1; j < i; ++j) {
    auto half = zeros(n);
    auto three_halves = zeros(n);
    for (std::size_t t = 1; t <= j; ++t) {
      half[2 * t - 1] = half[2 * t] = 1.0;
      three_halves[2 * t - 1] = 1.0;
      three_halves[2 * t] = -1.0;
    }
    const double w = -static_cast<double>(j);
    half[2 * j + 1] = half[2 * j + 2] = w;
    three_halves[2 * j + 1] = w;
    three_halves[2 * j + 2] = -w;
    fx.vectors.push_back({0.5, half, true});
    fx.vectors.push_back({1.5, three_halves, true});
  }
  auto alternating = zeros(n);
  auto center = zeros(n);
  center[0] = -2.0;
  for (std::size_t t = 1; t <= i; ++t) {
    alternating[2 * t - 1] = 1.0;
    alternating[2 * t] = -1.0;
    center[2 * t - 1] = center[2 * t] = 1.0;
  }
  fx.vectors.push_back({1.5, alternating, false});
  fx.vectors.push_back({1.5, center, false});
  return fx;
}

Fixture triangle_quadrilateral() {
  Fixture fx;
  fx.name = "triangle_quadrilateral";
  fx.example = "graph coupling: triangle joined to a quadrilateral";
  fx.recipe = "couple K_3 (q = 2) with C_4 (p = 0, so q joins C_4 vertices 1 and 3)";
  fx.build = [] {
    const std::vector<std::vector<double>> f1{{1, 0, -1, 0}, {0, 1, 0, -1}};
    return couple_via_neighbors(complete_graph(3), cycle_graph(4), 2, 0, f1);
  };
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
                                {5, 6}, {3, 6}, {2, 4}, {2, 6}};
  fx.expected_graph = Graph::from_edges(7, edges);
  fx.spectrum = {exactly(1, 1, 2)};
  fx.vectors = {{1.0, {0, 0, 0, 1, 0, -1, 0}, true}, {1.0, {0, 0, 0, 0, 1, 0, -1}, true}};
  return fx;
}

Fixture k13() {
  Fixture fx;
  fx.name = "k13";
  fx.example = "coupling note: a single vertex coupled with K_{1,2} gives K_{1,3}";
  fx.recipe = "couple K_1 (q = 0) with P_3 at leaf p = 0, so q joins the center";
  fx.build = [] {
    const std::vector<std::vector<double>> f1{{1, 0, -1}};
    return couple_via_neighbors(complete_graph(1), path_graph(3), 0, 0, f1);
  };
  const std::vector<Edge> edges{{1, 2}, {2, 3}, {0, 2}};
  fx.expected_graph = Graph::from_edges(4, edges);
  fx.spectrum = {exactly(0, 1, 1), exactly(1, 1, 2), exactly(2, 1, 1)};
  fx.spectrum_full = true;
  fx.vectors = {{1.0, {0, 1, 0, -1}, true}};
  return fx;
}

Fixture path_motif_uniform() {
  Fixture fx;
  fx.name = "path3_motif_uniform";
  fx.example = "induced path motif with equal degrees k: lambda = 1, 1 +- sqrt(2)/k";
  fx.recipe = "double motif {0, 1, 2} of C_6 (k = 2)";
  fx.build = [] {
    const Graph c6 = cycle_graph(6);
    return double_motif(Motif(c6, {0, 1, 2}));
  };
  const double r = std::sqrt(2.0) / 2.0;
  fx.spectrum = {at_least(1.0, 1), at_least(1.0 - r, 1), at_least(1.0 + r, 1)};
  // F = (1, 0, -1) solves the lambda = 1 system; copies are 6, 7, 8.
  fx.vectors = {{1.0, {1, 0, -1, 0, 0, 0, -1, 0, 1}, true}};
  return fx;
}

Fixture path_motif_general() {
  Fixture fx;
  fx.name = "path3_motif_general";
  fx.example = "induced path motif: lambda = 1, 1 +- sqrt((n1 + n3)/(n1 n2 n3))";
  fx.recipe = "double motif {0, 1, 2} (host degrees 2, 4, 3) of a 6-vertex host";
  fx.build = [] {
    const Graph host = path_motif_host();
    return double_motif(Motif(host, {0, 1, 2}));
  };
  const double r = std::sqrt((2.0 + 3.0) / (2.0 * 4.0 * 3.0));
  fx.spectrum = {at_least(1.0, 1), at_least(1.0 - r, 1), at_least(1.0 + r, 1)};
  return fx;
}

Fixture k2_attach_k2() {
  Fixture fx;
  fx.name = "k2_attach_k2";
  fx.example = "complete-graph attachment example: K_2 attached to K_2";
  fx.recipe = "attach Sigma = K_2 (all vertices) to host K_2 at anchor 0";
  fx.build = [] { return attach_subgraph(complete_graph(2), complete_graph(2), {0, 1}, 0); };
  const std::vector<Edge> edges{{0, 1}, {2, 3}, {0, 2}, {0, 3}};
  fx.expected_graph = Graph::from_edges(4, edges);
  fx.spectrum = {at_least(1.5, 1)};
  fx.vectors = {{1.5, {0, 0, 1, -1}, true}};
  return fx;
}

Fixture k3_two_anchors() {
  Fixture fx;
  fx.name = "k3_attach_two_anchors";
  fx.example = "complete graph joined to k anchors: lambda = (n+k)/(n+k-1), multiplicity n-1";
  fx.recipe = "attach Sigma = K_3 (all vertices) to both vertices of host K_2";
  fx.build = [] {
    const std::vector<Vertex> anchors{0, 1};
    return attach_subgraph_multi_anchor(complete_graph(2), complete_graph(3), {0, 1, 2}, anchors);
  };
  fx.spectrum = {{1.25, Rational(5, 4), 2, true}};
  return fx;
}

Fixture kite_fixture(std::size_t m, std::size_t n) {
  Fixture fx;
  fx.name = "kite_" + std::to_string(m) + "_" + std::to_string(n);
  fx.example = "kite K(m, n): (m+1)/m and (n+1)/n with the listed eigenvectors";
  fx.recipe = "attach Sigma = K_" + std::to_string(n) + " (all vertices) to vertex 0 of K_" +
              std::to_string(m + 1);
  fx.build = [m, n] { return attach_subgraph(complete_graph(m + 1), complete_graph(n), [n] {
                        std::vector<Vertex> all(n);
                        for (Vertex v = 0; v < n; ++v) all[v] = v;
                        return all;
                      }(), 0); };
  fx.expected_graph = kite_graph(m, n);
  const auto i64 = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  fx.spectrum.push_back(exactly(0, 1, 1));
  if (m > 1) fx.spectrum.push_back({Rational(i64(m) + 1, i64(m)).value(), Rational(i64(m) + 1, i64(m)), m - 1, true});
  if (n > 1) fx.spectrum.push_back({Rational(i64(n) + 1, i64(n)).value(), Rational(i64(n) + 1, i64(n)), n - 1, true});
  fx.kite = std::make_pair(m, n);

  const std::size_t size = m + n + 1;
  // Layout [alpha, p_1..p_m, q_1..q_n].
  for (std::size_t j = 1; j < m; ++j) {
    auto f = zeros(size);
    for (std::size_t t = 1; t <= j; ++t) f[t] = 1.0;
    f[j + 1] = -static_cast<double>(j);
    fx.vectors.push_back({static_cast<double>(m + 1) / static_cast<double>(m), f, false});
  }
  for (std::size_t j = 1; j < n; ++j) {
    auto f = zeros(size);
    for (std::size_t t = 0; t < j; ++t) f[size - 1 - t] = 1.0;
    f[size - 1 - j] = -static_cast<double>(j);
    // The K_n side is the attached Sigma, so these lie in the claim span.
    fx.vectors.push_back({static_cast<double>(n + 1) / static_cast<double>(n), f, true});
  }
  return fx;
}

Fixture kite_mm(std::size_t m) {
  Fixture fx = kite_fixture(m, m);
  fx.name = "kite_mm_" + std::to_string(m);
  fx.example = "kite K(m, m) has exactly three eigenvalues";
  const auto i64 = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  fx.spectrum = {exactly(0, 1, 1), exactly(i64(m) + 1, i64(m), 2 * m - 1), exactly(1, i64(m), 1)};
  fx.spectrum_full = true;
  return fx;
}

Fixture equitable_partition() {
  Fixture fx;
  fx.name = "equitable_partition";
  fx.example = "regular Sigma joined along equal-size subsets covering each vertex k times";
  fx.recipe = "host C_4, Sigma = C_4, subsets {i, i+1 mod 4} joined to host vertex i";
  fx.build = [] {
    std::vector<Assignment> a;
    for (Vertex i = 0; i < 4; ++i) a.push_back({{i, (i + 1) % 4}, i});
    return attach_multi_subgraphs(cycle_graph(4), cycle_graph(4), a);
  };
  // Degrees r + k = 4 on Sigma; the alternating function gives 1 - (-2)/4.
  fx.spectrum = {at_least(1.5, 1)};
  fx.vectors = {{1.5, {0, 0, 0, 0, 1, -1, 1, -1}, true}};
  return fx;
}

}  // namespace

std::vector<Fixture> paper_example_catalog() {
  std::vector<Fixture> out;
  out.push_back(vertex_doubling_figure());
  out.push_back(edge_doubling_figure());
  out.push_back(star_of_triangles_fixture(5));
  out.push_back(triangle_quadrilateral());
  out.push_back(k13());
  out.push_back(path_motif_uniform());
  out.push_back(path_motif_general());
  out.push_back(k2_attach_k2());
  out.push_back(k3_two_anchors());
  out.push_back(kite_fixture(2, 3));
  out.push_back(kite_fixture(3, 5));
  out.push_back(kite_mm(2));
  out.push_back(kite_mm(3));
  out.push_back(equitable_partition());
  return out;
}

}  // namespace motifspec
