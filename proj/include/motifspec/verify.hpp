#pragma once

// Numerical verification of eigenvalue claims and spectral invariants.
// Verdicts are data: failures are reported, never thrown. Exceptions are
// reserved for malformed inputs.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "motifspec/catalog.hpp"
#include "motifspec/evolution.hpp"
#include "motifspec/spectral.hpp"

namespace motifspec {

struct ClaimRecord {
  Provenance provenance = Provenance::kVertexDoubling;
  double lambda = 0.0;
  std::size_t multiplicity_at_least = 0;
  double residual_max = 0.0;
  std::size_t rank = 0;
  std::size_t numeric_multiplicity = 0;  // eigendecomposition + grouping
  std::size_t oracle_multiplicity = 0;   // rank deficiency of L - lambda I
  bool passed = false;

  friend bool operator==(const ClaimRecord&, const ClaimRecord&) = default;
};

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  std::vector<ClaimRecord> claims;
  std::vector<CheckRecord> checks;

  bool passed() const;
  void append(const VerificationReport& other);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Per claim: eigen_residual of every eigenfunction, rank of the set, and the
// multiplicity of lambda found by two independent routes. Passes iff
// residual <= tol.residual(n), rank == multiplicity_at_least, both
// multiplicities agree and are >= multiplicity_at_least.
VerificationReport verify_claims(const Graph& g, std::span<const EigenClaim> claims,
                                 const Tolerances& tol = {});
VerificationReport verify_claims(const OperationResult& result, const Tolerances& tol = {});

// Five checks on a connected graph: spectral bounds, the nullity identity
// m_1 = nullity(A), bipartite <=> lambda_max = 2, degree-weighted
// orthogonality of non-constant eigenfunctions, and the complete-graph
// extremal property. Throws PreconditionError on a disconnected graph or an
// isolated vertex.
VerificationReport verify_graph_invariants(const Graph& g, const Tolerances& tol = {});

// n - rank(L - lambda I), with the rank read off singular values from an
// SVD that shares no code with eigendecompose().
std::size_t brute_force_multiplicity_oracle(const Graph& g, double lambda,
                                            double tol = kDefaultGroupTol);

struct FixtureOutcome {
  std::string name;
  std::string example;
  bool passed = false;
  VerificationReport report;
};

FixtureOutcome run_fixture(const Fixture& fixture, const Tolerances& tol = {});

struct SweepTrial {
  std::size_t index = 0;
  std::string operation;
  std::size_t input_order = 0;
  std::size_t output_order = 0;
  std::size_t claim_count = 0;
  Graph graph;  // the operation's output
  bool oracle_agrees = false;
  bool passed = false;
  VerificationReport report;
};

struct SweepReport {
  std::vector<SweepTrial> trials;
  std::size_t passed_count() const;
  bool passed() const { return passed_count() == trials.size(); }
};

// Randomized claim-soundness sweep over every operation. Trial i depends only
// on (seed, i), so any failure replays with run_sweep_trial(seed, i).
SweepReport soundness_sweep(std::size_t trials, std::uint64_t seed, const Tolerances& tol = {});
SweepTrial run_sweep_trial(std::uint64_t seed, std::size_t index, const Tolerances& tol = {});

}  // namespace motifspec
