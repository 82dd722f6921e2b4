#include <algorithm>
#include <cmath>
#include <numeric>

#include "motifspec/errors.hpp"
#include "motifspec/kernels.hpp"
#include "motifspec/linalg.hpp"

namespace motifspec {

struct JacobiAccess {
  static std::vector<double>& data(SymMatrix& m) { return m.data_; }
};

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  if (x.size() != order_) throw InvalidArgument("SymMatrix::multiply: length mismatch");
  std::vector<double> y(order_);
  for (std::size_t i = 0; i < order_; ++i) y[i] = kernels::dot(row(i), x);
  return y;
}

bool SymMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

namespace {

void canonical_sign(std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::fabs(v[i]) > std::fabs(v[best]) * (1.0 + 1e-12)) best = i;
  }
  if (!v.empty() && v[best] < 0.0) kernels::scale(-1.0, v);
}

}  // namespace

EigenSystem jacobi_eigen(const SymMatrix& m) {
  if (!m.all_finite()) throw InvalidArgument("eigendecomposition input has non-finite entries");
  const std::size_t n = m.order();
  SymMatrix work = m;
  std::vector<double>& a = JacobiAccess::data(work);

  // Rows of vt are the (transposed) accumulated rotations; they end up as
  // the eigenvectors.
  std::vector<double> vt(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

  auto row = [n](std::vector<double>& buf, std::size_t i) {
    return std::span<double>(buf.data() + i * n, n);
  };

  double frob2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) frob2 += kernels::dot(work.row(i), work.row(i));
  // Off-diagonal entries below this are treated as zero; their effect on
  // any eigenvalue is bounded by the same amount.
  const double negligible = 1e-18 * std::sqrt(frob2);

  EigenSystem out;
  constexpr std::size_t kMaxSweeps = 100;
  for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off_max = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      off_max = std::max(off_max, kernels::max_abs(work.row(i).subspan(i + 1)));
    }
    if (off_max <= negligible) break;
    out.sweeps = sweep + 1;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::fabs(apq) <= negligible) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        kernels::rotate(row(a, p), row(a, q), c, s);
        for (std::size_t r = 0; r < n; ++r) {
          a[r * n + p] = a[p * n + r];
          a[r * n + q] = a[q * n + r];
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;

        kernels::rotate(row(vt, p), row(vt, q), c, s);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a[k * n + k]);
    std::vector<double> v(vt.begin() + static_cast<std::ptrdiff_t>(k * n),
                          vt.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
    canonical_sign(v);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<double>> orthonormal_basis(std::span<const std::vector<double>> vectors,
                                                   double tol) {
  std::vector<std::vector<double>> basis;
  for (const auto& v : vectors) {
    std::vector<double> w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) kernels::axpy(-kernels::dot(b, w), b, w);
    }
    const double norm = std::sqrt(kernels::dot(w, w));
    if (norm <= tol) continue;
    kernels::scale(1.0 / norm, w);
    basis.push_back(std::move(w));
  }
  return basis;
}

std::vector<std::vector<double>> null_space(std::span<const std::vector<double>> rows,
                                            std::size_t dim, double tol) {
  for (const auto& r : rows) {
    if (r.size() != dim) throw InvalidArgument("null_space: row length mismatch");
  }
  const auto range = orthonormal_basis(rows, tol);
  if (range.empty()) {
    std::vector<std::vector<double>> identity(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) identity[i][i] = 1.0;
    return identity;
  }
  if (range.size() >= dim) return {};

  // Complement via the projector I - Q Q^T, whose eigenvalues are exactly
  // 0 (range) or 1 (null space).
  SymMatrix projector(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      double v = (i == j) ? 1.0 : 0.0;
      for (const auto& q : range) v -= q[i] * q[j];
      projector.set(i, j, v);
    }
  }
  auto eig = jacobi_eigen(projector);
  std::vector<std::vector<double>> out;
  for (std::size_t k = 0; k < dim; ++k) {
    if (eig.values[k] > 0.5) out.push_back(std::move(eig.vectors[k]));
  }
  return out;
}

std::size_t numerical_rank(std::span<const std::vector<double>> vectors, double tol) {
  std::vector<std::vector<double>> unit;
  unit.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<double> w = v;
    const double norm = std::sqrt(kernels::dot(w, w));
    if (norm == 0.0) continue;
    kernels::scale(1.0 / norm, w);
    unit.push_back(std::move(w));
  }
  return orthonormal_basis(unit, tol).size();
}

}  // namespace motifspec
