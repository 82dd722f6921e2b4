#include "motifspec/spectral.hpp"

#include <cmath>
#include <string>

#include "motifspec/errors.hpp"
#include "motifspec/kernels.hpp"

namespace motifspec {

namespace {

void require_no_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " has degree zero; the normalized Laplacian is undefined");
    }
  }
}

void require_length(const Graph& g, std::span<const double> f, const char* what) {
  if (f.size() != g.order()) {
    throw InvalidArgument(std::string(what) + ": vector length " + std::to_string(f.size()) +
                          " does not match vertex count " + std::to_string(g.order()));
  }
}

}  // namespace

std::vector<EigenGroup> Spectrum::groups() const {
  std::vector<EigenGroup> out;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= eigenvalues.size(); ++k) {
    if (k == eigenvalues.size() || eigenvalues[k] - eigenvalues[k - 1] > group_tol) {
      double sum = 0.0;
      for (std::size_t i = start; i < k; ++i) sum += eigenvalues[i];
      out.push_back({sum / static_cast<double>(k - start), k - start});
      start = k;
    }
  }
  return out;
}

SymMatrix normalized_laplacian(const Graph& g) {
  require_no_isolated(g);
  SymMatrix m(g.order());
  for (Vertex i = 0; i < g.order(); ++i) {
    m.set(i, i, 1.0);
    for (Vertex j : g.neighbors(i)) {
      if (i < j) {
        m.set(i, j, -1.0 / std::sqrt(static_cast<double>(g.degree(i) * g.degree(j))));
      }
    }
  }
  return m;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

Spectrum eigendecompose(const SymMatrix& m, double group_tol) {
  auto eig = jacobi_eigen(m);
  Spectrum s;
  s.group_tol = group_tol;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const auto mv = m.multiply(eig.vectors[k]);
    for (std::size_t i = 0; i < mv.size(); ++i) {
      s.max_residual = std::max(s.max_residual, std::fabs(mv[i] - eig.values[k] * eig.vectors[k][i]));
    }
  }
  s.eigenvalues = std::move(eig.values);
  s.eigenvectors = std::move(eig.vectors);
  return s;
}

Spectrum laplacian_spectrum(const Graph& g, double group_tol) {
  return eigendecompose(normalized_laplacian(g), group_tol);
}

std::size_t multiplicity(const Spectrum& s, double lambda) {
  std::size_t count = 0;
  for (double ev : s.eigenvalues) {
    if (std::fabs(ev - lambda) <= s.group_tol) ++count;
  }
  return count;
}

std::vector<double> delta_apply(const Graph& g, std::span<const double> f) {
  require_length(g, f, "delta_apply");
  require_no_isolated(g);
  std::vector<double> out(g.order());
  for (Vertex i = 0; i < g.order(); ++i) {
    double sum = 0.0;
    for (Vertex j : g.neighbors(i)) sum += f[j];
    out[i] = f[i] - sum / static_cast<double>(g.degree(i));
  }
  return out;
}

double eigen_residual(const Graph& g, std::span<const double> f, double lambda) {
  require_length(g, f, "eigen_residual");
  require_no_isolated(g);
  const double scale = kernels::max_abs(f);
  if (scale == 0.0) throw InvalidArgument("eigen_residual: zero vector");
  double worst = 0.0;
  for (Vertex i = 0; i < g.order(); ++i) {
    double sum = 0.0;
    for (Vertex j : g.neighbors(i)) sum += f[j];
    const double r = sum / static_cast<double>(g.degree(i)) - (1.0 - lambda) * f[i];
    worst = std::max(worst, std::fabs(r));
  }
  return worst / scale;
}

double weighted_inner_product(const Graph& g, std::span<const double> f,
                              std::span<const double> h) {
  require_length(g, f, "weighted_inner_product");
  require_length(g, h, "weighted_inner_product");
  double sum = 0.0;
  for (Vertex i = 0; i < g.order(); ++i) sum += static_cast<double>(g.degree(i)) * f[i] * h[i];
  return sum;
}

std::size_t adjacency_nullity(const Graph& g, double group_tol) {
  return multiplicity(eigendecompose(adjacency_matrix(g), group_tol), 0.0);
}

std::vector<std::vector<double>> eigenvalue_one_basis(const Graph& g, double group_tol) {
  auto s = eigendecompose(adjacency_matrix(g), group_tol);
  std::vector<std::vector<double>> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (std::fabs(s.eigenvalues[k]) <= group_tol) out.push_back(std::move(s.eigenvectors[k]));
  }
  return out;
}

std::vector<double> to_random_walk(const Graph& g, std::span<const double> v) {
  require_length(g, v, "to_random_walk");
  require_no_isolated(g);
  std::vector<double> f(v.size());
  for (Vertex i = 0; i < g.order(); ++i) f[i] = v[i] / std::sqrt(static_cast<double>(g.degree(i)));
  return f;
}

}  // namespace motifspec
