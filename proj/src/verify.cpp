#include "motifspec/verify.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "motifspec/errors.hpp"
#include "motifspec/families.hpp"
#include "motifspec/kernels.hpp"

namespace motifspec {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

void check(VerificationReport& report, std::string name, bool ok, std::string detail) {
  report.checks.push_back({std::move(name), ok, std::move(detail)});
}

// Relative distance of f from span(basis).
double distance_from_span(std::span<const std::vector<double>> basis, std::vector<double> f) {
  const double norm = std::sqrt(kernels::dot(f, f));
  if (norm == 0.0) return 0.0;
  const auto q = orthonormal_basis(basis, 1e-12);
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : q) kernels::axpy(-kernels::dot(b, f), b, f);
  }
  return std::sqrt(kernels::dot(f, f)) / norm;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.passed; }) &&
         std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

void VerificationReport::append(const VerificationReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t brute_force_multiplicity_oracle(const Graph& g, double lambda, double tol) {
  const std::size_t n = g.order();
  if (g.has_isolated_vertex()) {
    throw PreconditionError("multiplicity oracle: graph has an isolated vertex");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.diagonal().array() -= lambda;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j : g.neighbors(i)) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          -1.0 / std::sqrt(static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j)));
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  std::size_t deficient = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv[k] <= tol) ++deficient;
  }
  return deficient;
}

VerificationReport verify_claims(const Graph& g, std::span<const EigenClaim> claims,
                                 const Tolerances& tol) {
  VerificationReport report;
  if (claims.empty()) return report;
  const Spectrum spectrum = laplacian_spectrum(g, tol.group);
  const double residual_tol = tol.residual(g.order());
  for (const auto& claim : claims) {
    ClaimRecord rec;
    rec.provenance = claim.provenance;
    rec.lambda = claim.lambda;
    rec.multiplicity_at_least = claim.multiplicity_at_least;
    bool shapes_ok = claim.eigenfunctions.size() == claim.multiplicity_at_least &&
                     claim.multiplicity_at_least > 0;
    for (const auto& f : claim.eigenfunctions) {
      if (f.size() != g.order() || kernels::max_abs(f) == 0.0) {
        shapes_ok = false;
        rec.residual_max = INFINITY;
        continue;
      }
      rec.residual_max = std::max(rec.residual_max, eigen_residual(g, f, claim.lambda));
    }
    if (shapes_ok) rec.rank = numerical_rank(claim.eigenfunctions, 1e-8);
    rec.numeric_multiplicity = multiplicity(spectrum, claim.lambda);
    rec.oracle_multiplicity = brute_force_multiplicity_oracle(g, claim.lambda, tol.group);
    rec.passed = shapes_ok && rec.residual_max <= residual_tol &&
                 rec.rank == claim.multiplicity_at_least &&
                 rec.numeric_multiplicity >= claim.multiplicity_at_least &&
                 rec.oracle_multiplicity == rec.numeric_multiplicity;
    report.claims.push_back(rec);
  }
  return report;
}

VerificationReport verify_claims(const OperationResult& result, const Tolerances& tol) {
  return verify_claims(result.graph, result.claims, tol);
}

VerificationReport verify_graph_invariants(const Graph& g, const Tolerances& tol) {
  if (!is_connected(g)) throw PreconditionError("spectral invariants assume a connected graph");
  if (g.has_isolated_vertex()) throw PreconditionError("graph has an isolated vertex");

  VerificationReport report;
  const Spectrum s = laplacian_spectrum(g, tol.group);
  const auto& ev = s.eigenvalues;
  const std::size_t n = ev.size();
  const double t = tol.group;

  {
    const bool lowest = std::fabs(ev.front()) <= t;
    const bool simple = n < 2 || ev[1] > t;
    const bool in_range = ev.front() >= -t && ev.back() <= 2.0 + t;
    check(report, "spectral_bounds", lowest && simple && in_range,
          "lambda_0=" + fmt(ev.front()) + (n > 1 ? " lambda_1=" + fmt(ev[1]) : std::string()) +
              " lambda_max=" + fmt(ev.back()));
  }
  {
    const std::size_t m1 = multiplicity(s, 1.0);
    const std::size_t nullity = adjacency_nullity(g, t);
    check(report, "nullity_identity", m1 == nullity,
          "m_1=" + std::to_string(m1) + " nullity(A)=" + std::to_string(nullity));
  }
  {
    const bool bip = is_bipartite(g);
    const bool top = std::fabs(ev.back() - 2.0) <= t;
    check(report, "bipartite_criterion", bip == top,
          std::string("bipartite=") + (bip ? "yes" : "no") + " lambda_max=" + fmt(ev.back()));
  }
  {
    const std::vector<double> ones(n, 1.0);
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::fabs(ev[k]) <= t) continue;
      const auto f = to_random_walk(g, s.eigenvectors[k]);
      worst = std::max(worst, std::fabs(weighted_inner_product(g, f, ones)));
    }
    check(report, "weighted_orthogonality", worst <= 1e-8, "max |sum n_i f(i)|=" + fmt(worst));
  }
  {
    bool ok = true;
    std::string detail = "n=1";
    if (n >= 2) {
      const double bound = static_cast<double>(n) / static_cast<double>(n - 1);
      const bool complete = is_complete(g);
      const bool low_eq = std::fabs(ev[1] - bound) <= t;
      const bool high_eq = std::fabs(ev.back() - bound) <= t;
      ok = ev[1] <= bound + t && bound <= ev.back() + t && low_eq == complete && high_eq == complete;
      detail = "lambda_1=" + fmt(ev[1]) + " N/(N-1)=" + fmt(bound) + " lambda_max=" + fmt(ev.back()) +
               (complete ? " (complete)" : "");
    }
    check(report, "complete_graph_extremes", ok, detail);
  }
  return report;
}

FixtureOutcome run_fixture(const Fixture& fixture, const Tolerances& tol) {
  FixtureOutcome out;
  out.name = fixture.name;
  out.example = fixture.example;
  OperationResult result;
  try {
    result = fixture.build();
  } catch (const std::exception& e) {
    check(out.report, "build", false, e.what());
    return out;
  }
  auto& report = out.report;
  const Graph& g = result.graph;

  if (fixture.expected_graph) {
    check(report, "graph_structure", g == *fixture.expected_graph,
          std::to_string(g.order()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
  }
  report.append(verify_claims(result, tol));

  const Spectrum s = laplacian_spectrum(g, tol.group);
  std::size_t listed = 0;
  for (const auto& frag : fixture.spectrum) {
    const std::size_t found = multiplicity(s, frag.value);
    const bool ok = frag.at_least ? found >= frag.multiplicity : found == frag.multiplicity;
    listed += frag.multiplicity;
    const std::string label = frag.exact ? frag.exact->to_string() : fmt(frag.value);
    check(report, "multiplicity(" + label + ")", ok,
          "expected " + std::string(frag.at_least ? ">= " : "") + std::to_string(frag.multiplicity) +
              ", found " + std::to_string(found));
  }
  if (fixture.spectrum_full) {
    check(report, "spectrum_complete", listed == g.order(),
          std::to_string(listed) + " of " + std::to_string(g.order()) + " eigenvalues listed");
  }

  for (std::size_t i = 0; i < fixture.vectors.size(); ++i) {
    const auto& ev = fixture.vectors[i];
    const double r = eigen_residual(g, ev.f, ev.lambda);
    bool ok = r <= tol.residual(g.order());
    std::string detail = "residual " + fmt(r);
    if (ev.in_claim_span) {
      std::vector<std::vector<double>> basis;
      for (const auto& c : result.claims) {
        if (std::fabs(c.lambda - ev.lambda) <= tol.group) {
          basis.insert(basis.end(), c.eigenfunctions.begin(), c.eigenfunctions.end());
        }
      }
      const double d = distance_from_span(basis, ev.f);
      ok = ok && d <= 1e-8;
      detail += ", distance from claim span " + fmt(d);
    }
    check(report, "eigenfunction[" + std::to_string(i) + "] lambda=" + fmt(ev.lambda), ok, detail);
  }

  if (fixture.kite) {
    const auto [m, n] = *fixture.kite;
    try {
      const auto tail = kite_tail_relation(m, n, s, tol.group);
      check(report, "kite_tail_sum", tail.holds,
            fmt(tail.lambda_beta) + " + " + fmt(tail.lambda_gamma) + " vs " + fmt(tail.expected_sum));
    } catch (const InvalidArgument& e) {
      check(report, "kite_tail_sum", false, e.what());
    }
  }

  if (is_connected(g)) report.append(verify_graph_invariants(g, tol));
  out.passed = report.passed();
  return out;
}

// ---------------------------------------------------------------------------
// Randomized sweep

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Graph random_host(Rng& rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = uniform(rng, lo, hi);
  return random_connected(n, uniform_real(rng, 0.08, 0.5), rng());
}

// Connected vertex set of the given size grown from a random seed vertex.
std::vector<Vertex> random_connected_subset(Rng& rng, const Graph& g, std::size_t size) {
  std::vector<Vertex> chosen{uniform(rng, 0, g.order() - 1)};
  std::set<Vertex> in(chosen.begin(), chosen.end());
  while (chosen.size() < size) {
    std::vector<Vertex> frontier;
    for (Vertex u : chosen) {
      for (Vertex v : g.neighbors(u)) {
        if (!in.count(v)) frontier.push_back(v);
      }
    }
    if (frontier.empty()) break;
    const Vertex v = frontier[uniform(rng, 0, frontier.size() - 1)];
    if (in.insert(v).second) chosen.push_back(v);
  }
  return chosen;
}

std::vector<Vertex> random_subset(Rng& rng, std::size_t n) {
  if (uniform(rng, 0, 1) == 0) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<Vertex> out;
  while (out.empty()) {
    for (Vertex v = 0; v < n; ++v) {
      if (uniform(rng, 0, 1) == 1) out.push_back(v);
    }
  }
  return out;
}

std::vector<Vertex> distinct_vertices(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

Graph random_sigma(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return complete_graph(uniform(rng, 2, 6));
    case 1:
      return cycle_graph(uniform(rng, 3, 6));
    default:
      return random_connected(uniform(rng, 2, 6), uniform_real(rng, 0.3, 0.8), rng());
  }
}

}  // namespace

SweepTrial run_sweep_trial(std::uint64_t seed, std::size_t index, const Tolerances& tol) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Rng rng(seq);
  SweepTrial trial;
  trial.index = index;

  OperationResult result;
  try {
    switch (uniform(rng, 0, 8)) {
      case 0: {
        const Graph g = random_host(rng, 2, 40);
        trial.operation = "double_vertex";
        trial.input_order = g.order();
        result = double_vertex(g, uniform(rng, 0, g.order() - 1));
        break;
      }
      case 1: {
        const Graph g = random_host(rng, 2, 40);
        trial.operation = "double_vertex_repeated";
        trial.input_order = g.order();
        result = double_vertex_repeated(g, uniform(rng, 0, g.order() - 1), uniform(rng, 1, 4));
        break;
      }
      case 2:
      case 3: {
        const Graph g = random_host(rng, 3, 36);
        const std::size_t size = uniform(rng, 1, std::min<std::size_t>(6, g.order() - 1));
        const Motif motif(g, random_connected_subset(rng, g, size));
        const std::size_t m = uniform(rng, 1, 4);
        trial.operation = m == 1 ? "double_motif" : "double_motif_repeated";
        trial.input_order = g.order();
        result = double_motif_repeated(motif, m);
        break;
      }
      case 4: {
        const Graph host = random_host(rng, 1, 20);
        const Graph base = random_host(rng, 2, 12);
        const Graph attachment =
            double_vertex_repeated(base, uniform(rng, 0, base.order() - 1), uniform(rng, 1, 2)).graph;
        const auto f1 = eigenvalue_one_basis(attachment, tol.group);
        trial.operation = "couple_via_neighbors";
        trial.input_order = host.order();
        result = couple_via_neighbors(host, attachment, uniform(rng, 0, host.order() - 1),
                                      uniform(rng, 0, attachment.order() - 1), f1);
        break;
      }
      case 5: {
        const Graph host = random_host(rng, 1, 20);
        const Graph sigma = random_sigma(rng);
        trial.operation = "attach_subgraph";
        trial.input_order = host.order();
        result = attach_subgraph(host, sigma, random_subset(rng, sigma.order()),
                                 uniform(rng, 0, host.order() - 1));
        break;
      }
      case 6: {
        const Graph host = random_host(rng, 2, 20);
        const Graph sigma = random_sigma(rng);
        const auto anchors = distinct_vertices(rng, host.order(), uniform(rng, 1, std::min<std::size_t>(3, host.order())));
        trial.operation = "attach_subgraph_multi_anchor";
        trial.input_order = host.order();
        result = attach_subgraph_multi_anchor(host, sigma, random_subset(rng, sigma.order()), anchors);
        break;
      }
      case 7: {
        const Graph host = random_host(rng, 2, 20);
        const Graph sigma = random_sigma(rng);
        const auto anchors = distinct_vertices(rng, host.order(), uniform(rng, 1, std::min<std::size_t>(4, host.order())));
        std::vector<Assignment> assignments;
        for (Vertex a : anchors) assignments.push_back({random_subset(rng, sigma.order()), a});
        trial.operation = "attach_multi_subgraphs";
        trial.input_order = host.order();
        result = attach_multi_subgraphs(host, sigma, assignments);
        break;
      }
      default: {
        const std::size_t n = uniform(rng, 3, 30);
        const Graph g = random_connected(n, uniform_real(rng, 0.05, 0.2), rng());
        trial.operation = "duplicate_class_claims";
        trial.input_order = g.order();
        result = duplicate_class_claims(g);
        break;
      }
    }
  } catch (const std::exception& e) {
    check(trial.report, "operation", false, e.what());
    return trial;
  }

  trial.output_order = result.graph.order();
  trial.graph = result.graph;
  trial.claim_count = result.claims.size();
  trial.report = verify_claims(result, tol);

  // Both multiplicity routes on every distinct eigenvalue and on 1.
  trial.oracle_agrees = true;
  if (!result.graph.has_isolated_vertex()) {
    const Spectrum s = laplacian_spectrum(result.graph, tol.group);
    auto groups = s.groups();
    groups.push_back({1.0, 0});
    for (const auto& grp : groups) {
      const std::size_t numeric = multiplicity(s, grp.value);
      const std::size_t oracle = brute_force_multiplicity_oracle(result.graph, grp.value, tol.group);
      if (numeric != oracle) {
        trial.oracle_agrees = false;
        check(trial.report, "oracle_agreement", false,
              "lambda=" + fmt(grp.value) + " grouping " + std::to_string(numeric) + " vs oracle " +
                  std::to_string(oracle));
      }
    }
    if (is_connected(result.graph)) trial.report.append(verify_graph_invariants(result.graph, tol));
  }
  trial.passed = trial.oracle_agrees && trial.report.passed();
  return trial;
}

std::size_t SweepReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const SweepTrial& t) { return t.passed; }));
}

SweepReport soundness_sweep(std::size_t trials, std::uint64_t seed, const Tolerances& tol) {
  SweepReport report;
  report.trials.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) report.trials.push_back(run_sweep_trial(seed, i, tol));
  return report;
}

}  // namespace motifspec
