#pragma once

// Named graph families with their known normalized-Laplacian spectra, and a
// seeded random connected graph generator.
//
// Vertex layouts:
//   complete(n)            0..n-1
//   path(n)                0-1-...-(n-1)
//   cycle(n)               0-1-...-(n-1)-0
//   star(k)                center 0, leaves 1..k          (K_{1,k})
//   complete_bipartite(a,b) parts {0..a-1}, {a..a+b-1}
//   kite(m,n)              alpha = 0, K_m on 1..m, K_n on m+1..m+n
//   star_of_triangles(i)   center 0, triangle t on {0, 2t-1, 2t}, t = 1..i
//
// The kite and star-of-triangles layouts coincide with the layouts produced
// by attach_subgraph(K_{m+1}, K_n, all, 0) and by repeatedly doubling the
// edge {1, 2} of K_3.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "motifspec/graph.hpp"
#include "motifspec/rational.hpp"

namespace motifspec {

enum class Family {
  kComplete,
  kPath,
  kCycle,
  kStar,
  kCompleteBipartite,
  kKite,
  kStarOfTriangles,
  kErdosRenyi,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::kComplete;
  std::size_t n = 0;  // main size parameter (see layouts above)
  std::size_t m = 0;  // kite K_m size; complete_bipartite first part
  double edge_prob = 0.0;
  std::uint64_t seed = 0;
};

struct ExpectedEigenvalue {
  double value = 0.0;
  std::optional<Rational> exact;
  std::size_t multiplicity = 0;
};

struct ExpectedSpectrum {
  std::vector<ExpectedEigenvalue> entries;
  bool full = false;  // entries account for every eigenvalue
  // Partial kite expectations also constrain the two unlisted eigenvalues.
  std::optional<double> residual_pair_sum;

  std::size_t listed() const;
};

struct GeneratedGraph {
  Graph graph;
  ExpectedSpectrum expected;  // empty and partial for erdos_renyi
};

// Throws InvalidArgument for out-of-range parameters.
GeneratedGraph generate(const FamilySpec& spec);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph kite_graph(std::size_t m, std::size_t n);
Graph star_of_triangles(std::size_t triangles);

// G(n, p) from a seeded Mersenne Twister; components are then chained by
// random edges until the graph is connected. Deterministic for a given seed.
Graph random_connected(std::size_t n, double edge_prob, std::uint64_t seed);

}  // namespace motifspec
