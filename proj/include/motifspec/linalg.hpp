#pragma once

// Small dense linear algebra: symmetric matrices, a cyclic Jacobi
// eigensolver and rank-revealing orthogonalization. Sized for desk-scale
// problems (a few thousand rows at most).

#include <cstddef>
#include <span>
#include <vector>

namespace motifspec {

// Dense real symmetric matrix, row-major. set() writes both triangles, so
// entries(i, j) == entries(j, i) holds exactly at all times.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  std::size_t order() const { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  void set(std::size_t i, std::size_t j, double value) {
    data_[i * order_ + j] = value;
    data_[j * order_ + i] = value;
  }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * order_, order_}; }

  std::vector<double> multiply(std::span<const double> x) const;
  bool all_finite() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  friend struct JacobiAccess;
  std::size_t order_ = 0;
  std::vector<double> data_;
};

struct EigenSystem {
  std::vector<double> values;                // non-decreasing
  std::vector<std::vector<double>> vectors;  // unit vectors, vectors[k] pairs with values[k]
  std::size_t sweeps = 0;
};

// Full eigendecomposition by cyclic Jacobi rotations. Eigenvectors are
// orthonormal; each is signed so that its first entry of largest magnitude
// is positive. Throws InvalidArgument on non-finite input.
EigenSystem jacobi_eigen(const SymMatrix& m);

// Orthonormal basis of span(vectors) by twice-iterated modified Gram-Schmidt.
// A vector whose component outside the current basis has norm <= tol is
// dropped as dependent.
std::vector<std::vector<double>> orthonormal_basis(std::span<const std::vector<double>> vectors,
                                                   double tol);

// Orthonormal basis of {x in R^dim : <row, x> = 0 for every row}. Rows whose
// independent part has norm <= tol do not constrain.
std::vector<std::vector<double>> null_space(std::span<const std::vector<double>> rows,
                                            std::size_t dim, double tol);

// Numerical rank of a set of vectors: each is normalized, then counted by
// orthonormal_basis at tolerance tol.
std::size_t numerical_rank(std::span<const std::vector<double>> vectors, double tol);

}  // namespace motifspec
