#pragma once

// The normalized graph Laplacian and the eigenvalue equations it satisfies.
//
// Two forms of the operator appear throughout:
//   * the random-walk form  (Delta f)(i) = f(i) - (1/n_i) sum_{j~i} f(j),
//   * the symmetric form    L = I - D^{-1/2} A D^{-1/2}.
// They share a spectrum; an eigenvector v of L corresponds to the
// eigenfunction f = D^{-1/2} v of Delta. Every constructed eigenfunction in
// this library is a Delta-eigenfunction and is checked with eigen_residual.

#include <cstddef>
#include <span>
#include <vector>

#include "motifspec/graph.hpp"
#include "motifspec/linalg.hpp"

namespace motifspec {

inline constexpr double kDefaultGroupTol = 1e-8;
inline constexpr double kDefaultResidualPerVertex = 1e-9;
inline constexpr double kDefaultRankTol = 1e-10;

struct Tolerances {
  // Eigenvalues closer than this are one multiplicity group.
  double group = kDefaultGroupTol;
  // Residual tolerance is residual_per_vertex * n for an n-vertex graph.
  double residual_per_vertex = kDefaultResidualPerVertex;
  // Singular-value cutoff in rank-revealing orthogonalization.
  double rank = kDefaultRankTol;

  double residual(std::size_t n) const { return residual_per_vertex * static_cast<double>(n); }
};

struct EigenGroup {
  double value = 0.0;  // mean of the grouped eigenvalues
  std::size_t multiplicity = 0;
};

struct Spectrum {
  std::vector<double> eigenvalues;                // non-decreasing
  std::vector<std::vector<double>> eigenvectors;  // orthonormal, paired by index
  double group_tol = kDefaultGroupTol;
  double max_residual = 0.0;  // max_k ||M v_k - lambda_k v_k||_inf

  std::size_t size() const { return eigenvalues.size(); }
  // Single-linkage clusters of the sorted eigenvalues with gap threshold
  // group_tol.
  std::vector<EigenGroup> groups() const;
};

// L(i,i) = 1, L(i,j) = -1/sqrt(n_i n_j) for i ~ j. Throws PreconditionError
// when a vertex has degree zero.
SymMatrix normalized_laplacian(const Graph& g);
SymMatrix adjacency_matrix(const Graph& g);

Spectrum eigendecompose(const SymMatrix& m, double group_tol = kDefaultGroupTol);
Spectrum laplacian_spectrum(const Graph& g, double group_tol = kDefaultGroupTol);

// Number of eigenvalues within group_tol of lambda.
std::size_t multiplicity(const Spectrum& s, double lambda);

// (Delta f)(i). Throws InvalidArgument on a length mismatch and
// PreconditionError on an isolated vertex.
std::vector<double> delta_apply(const Graph& g, std::span<const double> f);

// max_i |(1/n_i) sum_{j~i} f(j) - (1 - lambda) f(i)| / ||f||_inf.
// Throws InvalidArgument for a zero vector or a length mismatch.
double eigen_residual(const Graph& g, std::span<const double> f, double lambda);

// sum_i n_i f(i) h(i)
double weighted_inner_product(const Graph& g, std::span<const double> f,
                              std::span<const double> h);

// Kernel dimension of the adjacency matrix, from its own eigendecomposition.
std::size_t adjacency_nullity(const Graph& g, double group_tol = kDefaultGroupTol);

// Orthonormal basis of ker A, i.e. the functions with sum_{j~i} f(j) = 0 at
// every vertex: the eigenvalue-1 eigenfunctions of Delta.
std::vector<std::vector<double>> eigenvalue_one_basis(const Graph& g,
                                                      double group_tol = kDefaultGroupTol);

// Random-walk eigenfunction f = D^{-1/2} v for an eigenvector v of L.
std::vector<double> to_random_walk(const Graph& g, std::span<const double> v);

}  // namespace motifspec
