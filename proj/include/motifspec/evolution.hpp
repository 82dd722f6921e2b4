#pragma once

// Graph-evolution operations (vertex doubling, motif doubling, coupling,
// subgraph attachment). Each operation returns the evolved graph together
// with eigenvalue claims: an eigenvalue of the normalized Laplacian of the
// output graph and explicit eigenfunctions that witness it.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motifspec/graph.hpp"
#include "motifspec/rational.hpp"
#include "motifspec/spectral.hpp"

namespace motifspec {

enum class Provenance {
  kVertexDoubling,
  kMotifDoubling1,
  kMotifDoublingLambda,
  kRepeatedDoubling1,
  kRepeatedDoublingLambda,
  kCoupling1,
  kAttachTh3,
  kAttachCor2,
  kAttachCor4,
  kAttachTh4,
  kDuplicateClass,
};

// Stable upper-case tags used in reports, e.g. "MOTIF_DOUBLING_LAMBDA".
std::string_view provenance_tag(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view tag);

struct EigenClaim {
  double lambda = 0.0;
  std::optional<Rational> exact;  // set when lambda is a recognizable fraction
  // Random-walk eigenfunctions over the output graph's vertices; linearly
  // independent, one per unit of multiplicity_at_least.
  std::vector<std::vector<double>> eigenfunctions;
  std::size_t multiplicity_at_least = 0;
  Provenance provenance = Provenance::kVertexDoubling;

  friend bool operator==(const EigenClaim&, const EigenClaim&) = default;
};

struct OperationResult {
  Graph graph;
  VertexMap map;
  std::vector<EigenClaim> claims;
  std::vector<std::string> warnings;
};

struct OperationOptions {
  // Build on a disconnected host instead of throwing PreconditionError.
  // Claims are suppressed in that case.
  bool allow_disconnected = false;
  Tolerances tol;
};

// One root of det(A_Sigma + (lambda - 1) diag(host degrees)) = 0 with its
// null vector F (indexed by motif position).
struct MotifSolution {
  double lambda = 0.0;
  std::vector<double> f;
};

// The linear system a motif's restricted eigenvalue equation reduces to:
//   A(lambda) F = 0,  A(lambda) = A_Sigma + (lambda - 1) diag(n_{p_1}, ..., n_{p_m}),
// with degrees taken in the host graph.
class MotifSystem {
 public:
  explicit MotifSystem(const Motif& motif);

  std::size_t size() const { return degrees_.size(); }
  std::span<const std::size_t> degrees() const { return degrees_; }
  // Internal motif edges in local positions.
  std::span<const Edge> edges() const { return edges_; }

  SymMatrix matrix(double lambda) const;
  std::vector<double> apply(double lambda, std::span<const double> f) const;

  // All size() roots with multiplicity, ascending in lambda. Solved as the
  // symmetric eigenproblem of D^{-1/2} A_Sigma D^{-1/2}: an eigenpair (mu, u)
  // gives lambda = 1 - mu and F = D^{-1/2} u. Each F is scaled to unit
  // max-norm. Throws PreconditionError if a member has host degree zero.
  std::vector<MotifSolution> solve() const;

 private:
  std::vector<std::size_t> degrees_;
  std::vector<Edge> edges_;
};

std::vector<MotifSolution> motif_doubling_eigenvalues(const Motif& motif);

// Adds q with N(q) = N(p). Claim: lambda = 1 with f = e_p - e_q.
OperationResult double_vertex(const Graph& g, Vertex p, const OperationOptions& opts = {});

// Adds q_1..q_m, each with neighborhood N(p). Claim: lambda = 1 with
// f_j = 1 on {p, q_1..q_{j-1}}, -j at q_j, 0 elsewhere.
OperationResult double_vertex_repeated(const Graph& g, Vertex p, std::size_t m,
                                       const OperationOptions& opts = {});

OperationResult double_motif(const Motif& motif, const OperationOptions& opts = {});

// m copies of the original motif, appended round by round. Copy vertex
// q^(r)_alpha carries the motif's internal edges and the external neighbors
// of p_alpha; copies are adjacent neither to the originals nor to each
// other. For every motif-system root lambda with null vectors F, emits
// f_j = F on the motif and on copies 1..j-1, -j F on copy j, 0 elsewhere.
// lambda = 0 roots (a motif that is a whole component) are skipped.
OperationResult double_motif_repeated(const Motif& motif, std::size_t m,
                                      const OperationOptions& opts = {});

// Disjoint union of host and attachment plus edges q -- N_attachment(p).
// Attachment vertices are shifted by host.order(). Each f1 must be an
// eigenvalue-1 eigenfunction of the attachment; the claim extends them by
// zero on the host.
OperationResult couple_via_neighbors(const Graph& host, const Graph& attachment, Vertex q,
                                     Vertex p, std::span<const std::vector<double>> f1,
                                     const OperationOptions& opts = {});

// Sigma vertices in `subset` are joined to host vertex `anchor`.
struct Assignment {
  std::vector<Vertex> subset;
  Vertex anchor = 0;
};

OperationResult attach_subgraph(const Graph& host, const Graph& sigma,
                                std::vector<Vertex> sigma_c, Vertex p,
                                const OperationOptions& opts = {});

OperationResult attach_subgraph_multi_anchor(const Graph& host, const Graph& sigma,
                                             std::vector<Vertex> sigma_c,
                                             std::span<const Vertex> anchors,
                                             const OperationOptions& opts = {});

// Union construction: Sigma's vertices are shifted by host.order() and every
// subset member is joined to its anchor. Candidate pairs (lambda, f) come
// from D'^{-1/2} A_Sigma D'^{-1/2} with D' the output degrees of Sigma's
// vertices; a claim is the part of each eigenspace on which every subset sums
// to zero, extended by zero on the host.
OperationResult attach_multi_subgraphs(const Graph& host, const Graph& sigma,
                                       std::span<const Assignment> assignments,
                                       const OperationOptions& opts = {});

// Checks a caller-supplied (lambda, f on Sigma) against the restricted
// eigenvalue equation (output degrees) and the zero-sum conditions. Returns
// the claim on the attached graph or throws PreconditionError naming the
// failed condition.
EigenClaim validate_attachment_candidate(const Graph& host, const Graph& sigma,
                                         std::span<const Assignment> assignments, double lambda,
                                         std::span<const double> f_sigma,
                                         const OperationOptions& opts = {});

// lambda = 1 claims from classes of vertices with equal open neighborhoods.
// The graph is returned unchanged with the identity map.
OperationResult duplicate_class_claims(const Graph& g, const OperationOptions& opts = {});

// The kite K(m, n) has 0, (m+1)/m with multiplicity m-1 and (n+1)/n with
// multiplicity n-1; the two remaining eigenvalues sum to 1 + 1/m + 1/n.
struct KiteTail {
  double lambda_beta = 0.0;
  double lambda_gamma = 0.0;
  double expected_sum = 0.0;
  bool holds = false;
};

// Throws InvalidArgument if the spectrum lacks one of the known groups.
KiteTail kite_tail_relation(std::size_t m, std::size_t n, const Spectrum& s,
                            double tol = kDefaultGroupTol);

}  // namespace motifspec
