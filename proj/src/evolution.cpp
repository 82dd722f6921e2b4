#include "motifspec/evolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>

#include "motifspec/errors.hpp"
#include "motifspec/kernels.hpp"

namespace motifspec {

namespace {

constexpr std::array<std::pair<Provenance, std::string_view>, 11> kTags{{
    {Provenance::kVertexDoubling, "VERTEX_DOUBLING"},
    {Provenance::kMotifDoubling1, "MOTIF_DOUBLING_1"},
    {Provenance::kMotifDoublingLambda, "MOTIF_DOUBLING_LAMBDA"},
    {Provenance::kRepeatedDoubling1, "REPEATED_DOUBLING_1"},
    {Provenance::kRepeatedDoublingLambda, "REPEATED_DOUBLING_LAMBDA"},
    {Provenance::kCoupling1, "COUPLING_1"},
    {Provenance::kAttachTh3, "ATTACH_TH3"},
    {Provenance::kAttachCor2, "ATTACH_COR2"},
    {Provenance::kAttachCor4, "ATTACH_COR4"},
    {Provenance::kAttachTh4, "ATTACH_TH4"},
    {Provenance::kDuplicateClass, "DUPLICATE_CLASS"},
}};

// Unit max-norm, first entry of largest magnitude positive.
void normalize_display(std::vector<double>& f) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (std::fabs(f[i]) > std::fabs(f[best])) best = i;
  }
  if (f.empty() || f[best] == 0.0) return;
  kernels::scale(1.0 / f[best], f);
}

// Snaps lambda to a nearby small fraction for labelling; the float is kept.
std::optional<Rational> label(double lambda) { return recognize_rational(lambda, 1000, 1e-12); }

// Shared host checks. Returns false when claims must be suppressed.
bool check_host(const Graph& host, const OperationOptions& opts, OperationResult& out,
                const char* role = "host") {
  if (is_connected(host)) return true;
  if (!opts.allow_disconnected) {
    throw PreconditionError(std::string(role) +
                            " graph is disconnected; the eigenvalue results assume a connected "
                            "graph (use the override to build anyway)");
  }
  out.warnings.push_back(std::string(role) + " graph is disconnected; claims suppressed");
  return false;
}

// Output checks applied after construction.
void finish(OperationResult& out, bool claims_allowed) {
  if (out.graph.has_isolated_vertex()) {
    out.warnings.push_back("output graph has an isolated vertex; claims suppressed");
    claims_allowed = false;
  } else if (!is_connected(out.graph)) {
    out.warnings.push_back("output graph is disconnected");
  }
  if (!claims_allowed) out.claims.clear();
}

VertexMap identity_map(std::size_t n) {
  VertexMap map;
  map.image.resize(n);
  std::iota(map.image.begin(), map.image.end(), Vertex{0});
  return map;
}

// Groups consecutive entries of an ascending list whose lambdas differ by at
// most tol; returns [begin, end) index ranges.
template <typename T, typename Key>
std::vector<std::pair<std::size_t, std::size_t>> group_by_lambda(const std::vector<T>& items,
                                                                 Key key, double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= items.size(); ++k) {
    if (k == items.size() || key(items[k]) - key(items[k - 1]) > tol) {
      out.emplace_back(start, k);
      start = k;
    }
  }
  return out;
}

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (!g.contains(v)) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(v) + " is not a vertex of a " +
                          std::to_string(g.order()) + "-vertex graph");
  }
}

}  // namespace

std::string_view provenance_tag(Provenance p) {
  for (const auto& [value, tag] : kTags) {
    if (value == p) return tag;
  }
  return "UNKNOWN";
}

std::optional<Provenance> parse_provenance(std::string_view tag) {
  for (const auto& [value, name] : kTags) {
    if (name == tag) return value;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Motif system

MotifSystem::MotifSystem(const Motif& motif)
    : degrees_(motif.host_degrees()), edges_(motif.local_edges()) {}

SymMatrix MotifSystem::matrix(double lambda) const {
  SymMatrix a(size());
  for (std::size_t i = 0; i < size(); ++i) a.set(i, i, (lambda - 1.0) * static_cast<double>(degrees_[i]));
  for (const auto& [i, j] : edges_) a.set(i, j, 1.0);
  return a;
}

std::vector<double> MotifSystem::apply(double lambda, std::span<const double> f) const {
  return matrix(lambda).multiply(f);
}

std::vector<MotifSolution> MotifSystem::solve() const {
  for (std::size_t d : degrees_) {
    if (d == 0) throw PreconditionError("motif member has host degree zero");
  }
  std::vector<double> inv_sqrt(size());
  for (std::size_t i = 0; i < size(); ++i) inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(degrees_[i]));

  SymMatrix b(size());
  for (const auto& [i, j] : edges_) b.set(i, j, inv_sqrt[i] * inv_sqrt[j]);
  auto eig = jacobi_eigen(b);

  std::vector<MotifSolution> out;
  out.reserve(size());
  // Descending mu is ascending lambda.
  for (std::size_t k = size(); k-- > 0;) {
    MotifSolution s;
    s.lambda = 1.0 - eig.values[k];
    s.f = eig.vectors[k];
    for (std::size_t i = 0; i < size(); ++i) s.f[i] *= inv_sqrt[i];
    normalize_display(s.f);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<MotifSolution> motif_doubling_eigenvalues(const Motif& motif) {
  return MotifSystem(motif).solve();
}

// ---------------------------------------------------------------------------
// Vertex doubling

OperationResult double_vertex(const Graph& g, Vertex p, const OperationOptions& opts) {
  return double_vertex_repeated(g, p, 1, opts);
}

OperationResult double_vertex_repeated(const Graph& g, Vertex p, std::size_t m,
                                       const OperationOptions& opts) {
  require_vertex(g, p, "vertex");
  if (m == 0) throw InvalidArgument("repeat count must be positive");
  OperationResult out;
  const bool claims_allowed = check_host(g, opts, out);

  const std::size_t n = g.order();
  std::vector<Edge> edges = g.edges();
  out.map = identity_map(n);
  for (std::size_t j = 0; j < m; ++j) {
    const Vertex q = n + j;
    for (Vertex x : g.neighbors(p)) edges.emplace_back(q, x);
    out.map.created.push_back({q});
  }
  out.graph = Graph::from_edges(n + m, edges);

  EigenClaim claim;
  claim.lambda = 1.0;
  claim.exact = Rational(1);
  claim.provenance = (m == 1) ? Provenance::kVertexDoubling : Provenance::kRepeatedDoubling1;
  for (std::size_t j = 1; j <= m; ++j) {
    std::vector<double> f(n + m, 0.0);
    f[p] = 1.0;
    for (std::size_t l = 1; l < j; ++l) f[n + l - 1] = 1.0;
    f[n + j - 1] = -static_cast<double>(j);
    claim.eigenfunctions.push_back(std::move(f));
  }
  claim.multiplicity_at_least = m;
  out.claims.push_back(std::move(claim));
  finish(out, claims_allowed);
  return out;
}

// ---------------------------------------------------------------------------
// Motif doubling

OperationResult double_motif(const Motif& motif, const OperationOptions& opts) {
  return double_motif_repeated(motif, 1, opts);
}

OperationResult double_motif_repeated(const Motif& motif, std::size_t m,
                                      const OperationOptions& opts) {
  if (m == 0) throw InvalidArgument("repeat count must be positive");
  const Graph& g = motif.host();
  OperationResult out;
  bool claims_allowed = check_host(g, opts, out);

  const std::size_t n = g.order();
  const std::size_t k = motif.size();
  std::vector<Edge> edges = g.edges();
  const auto local = motif.local_edges();
  std::vector<std::vector<Vertex>> external(k);
  for (std::size_t alpha = 0; alpha < k; ++alpha) external[alpha] = motif.external_neighbors(alpha);

  out.map = identity_map(n);
  for (std::size_t r = 0; r < m; ++r) {
    const Vertex base = n + r * k;
    std::vector<Vertex> round(k);
    for (std::size_t alpha = 0; alpha < k; ++alpha) {
      round[alpha] = base + alpha;
      for (Vertex x : external[alpha]) edges.emplace_back(base + alpha, x);
    }
    for (const auto& [a, b] : local) edges.emplace_back(base + a, base + b);
    out.map.created.push_back(std::move(round));
  }
  out.graph = Graph::from_edges(n + m * k, edges);

  std::vector<MotifSolution> solutions;
  if (claims_allowed) {
    try {
      solutions = MotifSystem(motif).solve();
    } catch (const PreconditionError& e) {
      out.warnings.push_back(std::string(e.what()) + "; claims suppressed");
      claims_allowed = false;
    }
  }

  const double tol = opts.tol.group;
  for (const auto& [begin, end] :
       group_by_lambda(solutions, [](const MotifSolution& s) { return s.lambda; }, tol)) {
    double lambda = 0.0;
    for (std::size_t i = begin; i < end; ++i) lambda += solutions[i].lambda;
    lambda /= static_cast<double>(end - begin);
    if (std::fabs(lambda) <= tol) continue;

    EigenClaim claim;
    claim.exact = label(lambda);
    claim.lambda = claim.exact ? claim.exact->value() : lambda;
    const bool is_one = std::fabs(lambda - 1.0) <= tol;
    if (m == 1) {
      claim.provenance = is_one ? Provenance::kMotifDoubling1 : Provenance::kMotifDoublingLambda;
    } else {
      claim.provenance = is_one ? Provenance::kRepeatedDoubling1 : Provenance::kRepeatedDoublingLambda;
    }
    for (std::size_t s = begin; s < end; ++s) {
      const auto& f = solutions[s].f;
      for (std::size_t j = 1; j <= m; ++j) {
        std::vector<double> h(out.graph.order(), 0.0);
        for (std::size_t alpha = 0; alpha < k; ++alpha) {
          h[motif.vertex(alpha)] = f[alpha];
          for (std::size_t l = 1; l < j; ++l) h[out.map.created[l - 1][alpha]] = f[alpha];
          h[out.map.created[j - 1][alpha]] = -static_cast<double>(j) * f[alpha];
        }
        claim.eigenfunctions.push_back(std::move(h));
      }
    }
    claim.multiplicity_at_least = claim.eigenfunctions.size();
    out.claims.push_back(std::move(claim));
  }
  finish(out, claims_allowed);
  return out;
}

// ---------------------------------------------------------------------------
// Coupling

OperationResult couple_via_neighbors(const Graph& host, const Graph& attachment, Vertex q,
                                     Vertex p, std::span<const std::vector<double>> f1,
                                     const OperationOptions& opts) {
  require_vertex(host, q, "host vertex q");
  require_vertex(attachment, p, "attachment vertex p");
  const std::size_t n_host = host.order();
  const std::size_t n_att = attachment.order();

  for (std::size_t i = 0; i < f1.size(); ++i) {
    if (f1[i].size() != n_att) {
      throw InvalidArgument("eigenfunction " + std::to_string(i) + " has length " +
                            std::to_string(f1[i].size()) + ", attachment has " +
                            std::to_string(n_att) + " vertices");
    }
    const double r = eigen_residual(attachment, f1[i], 1.0);
    if (r > opts.tol.residual(n_att)) {
      throw PreconditionError("eigenfunction " + std::to_string(i) +
                              " is not an eigenvalue-1 eigenfunction of the attachment "
                              "(residual " + std::to_string(r) + ")");
    }
  }
  if (numerical_rank(f1, opts.tol.rank) != f1.size()) {
    throw InvalidArgument("supplied eigenvalue-1 eigenfunctions are linearly dependent");
  }

  OperationResult out;
  bool claims_allowed = check_host(host, opts, out);
  claims_allowed = check_host(attachment, opts, out, "attachment") && claims_allowed;

  std::vector<Edge> edges = disjoint_union(host, attachment).edges();
  for (Vertex j : attachment.neighbors(p)) edges.emplace_back(q, n_host + j);
  out.graph = Graph::from_edges(n_host + n_att, edges);
  out.map = identity_map(n_host);
  std::vector<Vertex> added(n_att);
  std::iota(added.begin(), added.end(), n_host);
  out.map.created.push_back(std::move(added));

  if (f1.empty()) {
    out.warnings.push_back("no eigenvalue-1 eigenfunction supplied; no claim");
  } else {
    EigenClaim claim;
    claim.lambda = 1.0;
    claim.exact = Rational(1);
    claim.provenance = Provenance::kCoupling1;
    for (const auto& f : f1) {
      std::vector<double> h(n_host + n_att, 0.0);
      std::copy(f.begin(), f.end(), h.begin() + static_cast<std::ptrdiff_t>(n_host));
      claim.eigenfunctions.push_back(std::move(h));
    }
    claim.multiplicity_at_least = f1.size();
    out.claims.push_back(std::move(claim));
  }
  finish(out, claims_allowed);
  return out;
}

// ---------------------------------------------------------------------------
// Attachment

namespace {

struct AttachLayout {
  Graph graph;
  std::vector<std::size_t> sigma_degrees;  // output degrees of Sigma's vertices
  std::vector<std::size_t> coverage;       // number of subsets containing each Sigma vertex
};

void validate_assignments(const Graph& host, const Graph& sigma,
                          std::span<const Assignment> assignments) {
  if (assignments.empty()) throw InvalidArgument("at least one (subset, anchor) pair is required");
  std::set<Vertex> anchors;
  for (const auto& a : assignments) {
    if (a.subset.empty()) throw InvalidArgument("attachment subset is empty");
    require_vertex(host, a.anchor, "anchor");
    if (!anchors.insert(a.anchor).second) {
      throw InvalidArgument("anchor " + std::to_string(a.anchor) + " used more than once");
    }
    std::set<Vertex> seen;
    for (Vertex v : a.subset) {
      require_vertex(sigma, v, "subset vertex");
      if (!seen.insert(v).second) {
        throw InvalidArgument("subset vertex " + std::to_string(v) + " listed twice");
      }
    }
  }
}

AttachLayout build_attachment(const Graph& host, const Graph& sigma,
                              std::span<const Assignment> assignments) {
  const std::size_t offset = host.order();
  std::vector<Edge> edges = disjoint_union(host, sigma).edges();
  AttachLayout layout;
  layout.coverage.assign(sigma.order(), 0);
  for (const auto& a : assignments) {
    for (Vertex v : a.subset) {
      edges.emplace_back(a.anchor, offset + v);
      ++layout.coverage[v];
    }
  }
  layout.graph = Graph::from_edges(offset + sigma.order(), edges);
  layout.sigma_degrees.resize(sigma.order());
  for (Vertex v = 0; v < sigma.order(); ++v) layout.sigma_degrees[v] = layout.graph.degree(offset + v);
  return layout;
}

Provenance attach_provenance(const Graph& sigma, std::span<const Assignment> assignments) {
  const auto same_subset = [&](const Assignment& a) {
    auto s = a.subset;
    auto t = assignments.front().subset;
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    return s == t;
  };
  const bool shared = std::all_of(assignments.begin(), assignments.end(), same_subset);
  if (shared && assignments.front().subset.size() == sigma.order() && is_complete(sigma)) {
    return assignments.size() == 1 ? Provenance::kAttachCor2 : Provenance::kAttachCor4;
  }
  return shared ? Provenance::kAttachTh3 : Provenance::kAttachTh4;
}

void note_equitable(const Graph& host, const Graph& sigma, std::span<const Assignment> assignments,
                    const AttachLayout& layout, OperationResult& out) {
  if (assignments.size() < 2) return;
  const bool even = std::all_of(layout.coverage.begin(), layout.coverage.end(),
                                [&](std::size_t c) { return c == layout.coverage.front(); });
  if (!even) {
    out.warnings.push_back(
        "subsets cover Sigma unevenly; the equitable-partition configuration does not apply");
    return;
  }
  const bool equal_sizes = std::all_of(assignments.begin(), assignments.end(), [&](const Assignment& a) {
    return a.subset.size() == assignments.front().subset.size();
  });
  if (equal_sizes && is_regular(sigma) && is_regular(host) && assignments.size() == host.order()) {
    const std::size_t r = sigma.order() > 0 ? sigma.degree(0) : 0;
    out.warnings.push_back("equitable partition {host, Sigma}: every Sigma vertex has degree " +
                           std::to_string(r + layout.coverage.front()));
  }
}

}  // namespace

OperationResult attach_subgraph(const Graph& host, const Graph& sigma, std::vector<Vertex> sigma_c,
                                Vertex p, const OperationOptions& opts) {
  const Assignment a{std::move(sigma_c), p};
  return attach_multi_subgraphs(host, sigma, std::span<const Assignment>(&a, 1), opts);
}

OperationResult attach_subgraph_multi_anchor(const Graph& host, const Graph& sigma,
                                             std::vector<Vertex> sigma_c,
                                             std::span<const Vertex> anchors,
                                             const OperationOptions& opts) {
  if (anchors.empty()) throw InvalidArgument("at least one anchor is required");
  std::vector<Assignment> assignments;
  for (Vertex p : anchors) assignments.push_back({sigma_c, p});
  return attach_multi_subgraphs(host, sigma, assignments, opts);
}

OperationResult attach_multi_subgraphs(const Graph& host, const Graph& sigma,
                                       std::span<const Assignment> assignments,
                                       const OperationOptions& opts) {
  validate_assignments(host, sigma, assignments);
  OperationResult out;
  bool claims_allowed = check_host(host, opts, out);

  auto layout = build_attachment(host, sigma, assignments);
  out.graph = layout.graph;
  out.map = identity_map(host.order());
  std::vector<Vertex> added(sigma.order());
  std::iota(added.begin(), added.end(), host.order());
  out.map.created.push_back(std::move(added));
  note_equitable(host, sigma, assignments, layout, out);

  const std::size_t s = sigma.order();
  if (std::find(layout.sigma_degrees.begin(), layout.sigma_degrees.end(), 0u) !=
      layout.sigma_degrees.end()) {
    claims_allowed = false;
  }

  if (claims_allowed) {
    std::vector<double> inv_sqrt(s);
    for (std::size_t i = 0; i < s; ++i) inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(layout.sigma_degrees[i]));
    SymMatrix b(s);
    for (const auto& [u, v] : sigma.edges()) b.set(u, v, inv_sqrt[u] * inv_sqrt[v]);
    auto eig = jacobi_eigen(b);

    struct Candidate {
      double lambda;
      std::vector<double> f;
    };
    std::vector<Candidate> candidates;
    for (std::size_t k = s; k-- > 0;) {
      Candidate c{1.0 - eig.values[k], eig.vectors[k]};
      for (std::size_t i = 0; i < s; ++i) c.f[i] *= inv_sqrt[i];
      candidates.push_back(std::move(c));
    }

    const Provenance provenance = attach_provenance(sigma, assignments);
    const double tol = opts.tol.group;
    for (const auto& [begin, end] :
         group_by_lambda(candidates, [](const Candidate& c) { return c.lambda; }, tol)) {
      double lambda = 0.0;
      for (std::size_t i = begin; i < end; ++i) lambda += candidates[i].lambda;
      lambda /= static_cast<double>(end - begin);
      if (std::fabs(lambda) <= tol) continue;

      // Constraint l on the coefficient vector x: sum_{j in subset_l} (F x)(j) = 0.
      const std::size_t r = end - begin;
      std::vector<std::vector<double>> rows;
      for (const auto& a : assignments) {
        std::vector<double> row(r, 0.0);
        for (std::size_t i = 0; i < r; ++i) {
          for (Vertex v : a.subset) row[i] += candidates[begin + i].f[v];
        }
        rows.push_back(std::move(row));
      }
      const auto coefficients = null_space(rows, r, opts.tol.rank);
      if (coefficients.empty()) continue;

      EigenClaim claim;
      claim.exact = label(lambda);
      claim.lambda = claim.exact ? claim.exact->value() : lambda;
      claim.provenance = provenance;
      for (const auto& x : coefficients) {
        std::vector<double> f(s, 0.0);
        for (std::size_t i = 0; i < r; ++i) kernels::axpy(x[i], candidates[begin + i].f, f);
        normalize_display(f);
        std::vector<double> h(out.graph.order(), 0.0);
        std::copy(f.begin(), f.end(), h.begin() + static_cast<std::ptrdiff_t>(host.order()));
        claim.eigenfunctions.push_back(std::move(h));
      }
      claim.multiplicity_at_least = claim.eigenfunctions.size();
      out.claims.push_back(std::move(claim));
    }
  }
  finish(out, claims_allowed);
  return out;
}

EigenClaim validate_attachment_candidate(const Graph& host, const Graph& sigma,
                                         std::span<const Assignment> assignments, double lambda,
                                         std::span<const double> f_sigma,
                                         const OperationOptions& opts) {
  validate_assignments(host, sigma, assignments);
  if (f_sigma.size() != sigma.order()) {
    throw InvalidArgument("candidate eigenfunction length does not match Sigma's vertex count");
  }
  const double scale = kernels::max_abs(f_sigma);
  if (scale == 0.0) throw InvalidArgument("candidate eigenfunction is zero");
  const auto layout = build_attachment(host, sigma, assignments);
  const double tol = opts.tol.residual(layout.graph.order());

  for (Vertex i = 0; i < sigma.order(); ++i) {
    if (layout.sigma_degrees[i] == 0) throw PreconditionError("Sigma vertex is isolated after attachment");
    double sum = 0.0;
    for (Vertex j : sigma.neighbors(i)) sum += f_sigma[j];
    const double r = sum / static_cast<double>(layout.sigma_degrees[i]) - (1.0 - lambda) * f_sigma[i];
    if (std::fabs(r) / scale > tol) {
      throw PreconditionError("restricted eigenvalue equation fails at Sigma vertex " +
                              std::to_string(i));
    }
  }
  for (std::size_t l = 0; l < assignments.size(); ++l) {
    double sum = 0.0;
    for (Vertex v : assignments[l].subset) sum += f_sigma[v];
    if (std::fabs(sum) / scale > tol) {
      throw PreconditionError("zero-sum condition fails for subset " + std::to_string(l));
    }
  }

  EigenClaim claim;
  claim.lambda = lambda;
  claim.exact = label(lambda);
  claim.provenance = attach_provenance(sigma, assignments);
  std::vector<double> h(layout.graph.order(), 0.0);
  std::copy(f_sigma.begin(), f_sigma.end(), h.begin() + static_cast<std::ptrdiff_t>(host.order()));
  claim.eigenfunctions.push_back(std::move(h));
  claim.multiplicity_at_least = 1;
  return claim;
}

// ---------------------------------------------------------------------------

OperationResult duplicate_class_claims(const Graph& g, const OperationOptions& opts) {
  OperationResult out;
  const bool claims_allowed = check_host(g, opts, out);
  out.graph = g;
  out.map = identity_map(g.order());
  for (const auto& cls : duplicate_vertex_classes(g).classes) {
    if (cls.size() < 2) continue;
    EigenClaim claim;
    claim.lambda = 1.0;
    claim.exact = Rational(1);
    claim.provenance = Provenance::kDuplicateClass;
    for (std::size_t j = 1; j < cls.size(); ++j) {
      std::vector<double> f(g.order(), 0.0);
      f[cls[0]] = 1.0;
      f[cls[j]] = -1.0;
      claim.eigenfunctions.push_back(std::move(f));
    }
    claim.multiplicity_at_least = cls.size() - 1;
    out.claims.push_back(std::move(claim));
  }
  finish(out, claims_allowed);
  return out;
}

KiteTail kite_tail_relation(std::size_t m, std::size_t n, const Spectrum& s, double tol) {
  if (m == 0 || n == 0) throw InvalidArgument("kite parameters must be positive");
  if (s.size() != m + n + 1) {
    throw InvalidArgument("spectrum has " + std::to_string(s.size()) + " values, kite K(" +
                          std::to_string(m) + "," + std::to_string(n) + ") has " +
                          std::to_string(m + n + 1) + " vertices");
  }
  std::vector<double> rest = s.eigenvalues;
  const auto remove = [&](double value, std::size_t count) {
    for (std::size_t c = 0; c < count; ++c) {
      auto it = std::min_element(rest.begin(), rest.end(), [&](double a, double b) {
        return std::fabs(a - value) < std::fabs(b - value);
      });
      if (it == rest.end() || std::fabs(*it - value) > tol) {
        throw InvalidArgument("spectrum lacks the expected eigenvalue " + std::to_string(value));
      }
      rest.erase(it);
    }
  };
  remove(0.0, 1);
  remove(static_cast<double>(m + 1) / static_cast<double>(m), m - 1);
  remove(static_cast<double>(n + 1) / static_cast<double>(n), n - 1);

  KiteTail out;
  out.lambda_beta = std::min(rest[0], rest[1]);
  out.lambda_gamma = std::max(rest[0], rest[1]);
  out.expected_sum = 1.0 + 1.0 / static_cast<double>(m) + 1.0 / static_cast<double>(n);
  out.holds = std::fabs(out.lambda_beta + out.lambda_gamma - out.expected_sum) <= tol;
  return out;
}

}  // namespace motifspec
