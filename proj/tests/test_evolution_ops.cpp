#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "motifspec/errors.hpp"
#include "motifspec/evolution.hpp"
#include "motifspec/families.hpp"
#include "motifspec/spectral.hpp"
#include "oracle.hpp"

using namespace motifspec;

namespace {

Graph g_of(std::size_t n, std::vector<Edge> edges) { return build_graph(n, edges); }

// Every claim checked with the test-side oracle only.
void expect_sound(const OperationResult& r, const char* where) {
  const auto ev = oracle::laplacian_eigenvalues(r.graph);
  for (const auto& c : r.claims) {
    ASSERT_EQ(c.eigenfunctions.size(), c.multiplicity_at_least) << where;
    for (const auto& f : c.eigenfunctions) {
      ASSERT_EQ(f.size(), r.graph.order()) << where;
      EXPECT_LE(oracle::residual(r.graph, f, c.lambda), 1e-9 * r.graph.order()) << where << " lambda=" << c.lambda;
    }
    EXPECT_EQ(oracle::rank(c.eigenfunctions), c.multiplicity_at_least) << where;
    EXPECT_GE(oracle::count_near(ev, c.lambda, 1e-8), c.multiplicity_at_least) << where << " lambda=" << c.lambda;
  }
}

const EigenClaim* find_claim(const OperationResult& r, double lambda) {
  for (const auto& c : r.claims) {
    if (std::fabs(c.lambda - lambda) <= 1e-9) return &c;
  }
  return nullptr;
}

bool proportional(const std::vector<double>& a, const std::vector<double>& b) {
  return oracle::rank({a, b}) == 1;
}

std::vector<Vertex> iota(std::size_t n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST(Provenance, TagsRoundTrip) {
  for (auto p : {Provenance::kVertexDoubling, Provenance::kMotifDoubling1, Provenance::kMotifDoublingLambda,
                 Provenance::kRepeatedDoubling1, Provenance::kRepeatedDoublingLambda, Provenance::kCoupling1,
                 Provenance::kAttachTh3, Provenance::kAttachCor2, Provenance::kAttachCor4,
                 Provenance::kAttachTh4, Provenance::kDuplicateClass}) {
    EXPECT_EQ(parse_provenance(provenance_tag(p)), p);
  }
  EXPECT_EQ(provenance_tag(Provenance::kAttachCor2), "ATTACH_COR2");
  EXPECT_FALSE(parse_provenance("THEOREM_9"));
}

// ---------------------------------------------------------------------------
// Vertex doubling

TEST(DoubleVertex, EdgeBecomesPath) {
  const auto r = double_vertex(complete_graph(2), 0);
  EXPECT_EQ(r.graph, path_graph(3));
  ASSERT_EQ(r.claims.size(), 1u);
  EXPECT_EQ(r.claims[0].lambda, 1.0);
  EXPECT_EQ(r.claims[0].exact, Rational(1));
  EXPECT_EQ(r.claims[0].provenance, Provenance::kVertexDoubling);
  EXPECT_EQ(r.claims[0].eigenfunctions[0], (std::vector<double>{1, 0, -1}));
  EXPECT_EQ(r.map.image, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(r.map.created, (std::vector<std::vector<Vertex>>{{2}}));
  expect_sound(r, "K2");
}

TEST(DoubleVertex, Triangle) {
  const auto r = double_vertex(complete_graph(3), 0);
  EXPECT_EQ(r.graph.order(), 4u);
  EXPECT_FALSE(r.graph.adjacent(0, 3));
  EXPECT_EQ(r.claims[0].eigenfunctions[0], (std::vector<double>{1, 0, 0, -1}));
  expect_sound(r, "K3");
}

TEST(DoubleVertex, InvalidVertex) {
  EXPECT_THROW(double_vertex(complete_graph(3), 3), InvalidArgument);
}

TEST(DoubleVertexRepeated, TriangleTwice) {
  const auto r = double_vertex_repeated(complete_graph(3), 2, 2);
  EXPECT_EQ(r.graph.order(), 5u);
  ASSERT_EQ(r.claims.size(), 1u);
  const auto& c = r.claims[0];
  EXPECT_EQ(c.provenance, Provenance::kRepeatedDoubling1);
  EXPECT_EQ(c.multiplicity_at_least, 2u);
  EXPECT_EQ(c.eigenfunctions[0], (std::vector<double>{0, 0, 1, -1, 0}));
  EXPECT_EQ(c.eigenfunctions[1], (std::vector<double>{0, 0, 1, 1, -2}));
  expect_sound(r, "K3 x2");
}

TEST(DoubleVertexRepeated, OnceEqualsDoubleVertex) {
  const auto a = double_vertex_repeated(complete_graph(2), 0, 1);
  const auto b = double_vertex(complete_graph(2), 0);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.claims, b.claims);
  EXPECT_EQ(a.map, b.map);
}

TEST(DoubleVertexRepeated, StarCenterThreeTimes) {
  const auto r = double_vertex_repeated(star_graph(2), 0, 3);
  EXPECT_GE(oracle::count_near(oracle::laplacian_eigenvalues(r.graph), 1.0, 1e-8), 3u);
  expect_sound(r, "K12 center");
}

TEST(DoubleVertexRepeated, ZeroRepeatsRejected) {
  EXPECT_THROW(double_vertex_repeated(complete_graph(3), 0, 0), InvalidArgument);
}

TEST(DoubleVertex, DisconnectedHostNeedsOverride) {
  const Graph g = g_of(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(double_vertex(g, 0), PreconditionError);
  OperationOptions opts;
  opts.allow_disconnected = true;
  const auto r = double_vertex(g, 0, opts);
  EXPECT_EQ(r.graph.order(), 5u);
  EXPECT_TRUE(r.claims.empty());
  EXPECT_FALSE(r.warnings.empty());
}

// ---------------------------------------------------------------------------
// Motif doubling

TEST(DoubleMotif, TriangleEdge) {
  const Graph k3 = complete_graph(3);
  const auto r = double_motif(Motif(k3, {1, 2}));
  EXPECT_EQ(r.graph, star_of_triangles(2));
  ASSERT_EQ(r.claims.size(), 2u);
  EXPECT_NEAR(r.claims[0].lambda, 0.5, 1e-12);
  EXPECT_NEAR(r.claims[1].lambda, 1.5, 1e-12);
  EXPECT_EQ(r.claims[0].exact, Rational(1, 2));
  EXPECT_EQ(r.claims[1].exact, Rational(3, 2));
  EXPECT_EQ(r.claims[0].provenance, Provenance::kMotifDoublingLambda);
  EXPECT_EQ(r.map.created, (std::vector<std::vector<Vertex>>{{3, 4}}));
  expect_sound(r, "K3 edge");
}

TEST(DoubleMotif, PathMiddleEdge) {
  const Graph p4 = path_graph(4);
  const auto r = double_motif(Motif(p4, {1, 2}));
  ASSERT_EQ(r.claims.size(), 2u);
  // lambda = 1 -+ 1/sqrt(2 * 2)
  EXPECT_NEAR(r.claims[0].lambda, 0.5, 1e-12);
  EXPECT_NEAR(r.claims[1].lambda, 1.5, 1e-12);
  expect_sound(r, "P4 middle edge");
}

TEST(DoubleMotif, SingleVertexMotifIsVertexDoubling) {
  const Graph c5 = cycle_graph(5);
  const auto a = double_motif(Motif(c5, {2}));
  const auto b = double_vertex(c5, 2);
  EXPECT_EQ(a.graph, b.graph);
  ASSERT_EQ(a.claims.size(), 1u);
  EXPECT_EQ(a.claims[0].lambda, 1.0);
  EXPECT_EQ(a.claims[0].provenance, Provenance::kMotifDoubling1);
  EXPECT_EQ(a.claims[0].eigenfunctions, b.claims[0].eigenfunctions);
}

TEST(DoubleMotif, DegreeContract) {
  std::mt19937_64 rng(9);
  for (std::uint32_t seed = 0; seed < 25; ++seed) {
    const Graph g = oracle::random_connected(8 + seed % 10, 0.3, seed);
    std::vector<Vertex> vs = iota(g.order());
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(1 + seed % 4);
    const Motif motif(g, vs);
    const auto r = double_motif(motif);
    const Graph& out = r.graph;
    for (std::size_t a = 0; a < vs.size(); ++a) {
      EXPECT_EQ(out.degree(g.order() + a), g.degree(vs[a]));
      for (Vertex v : vs) EXPECT_FALSE(out.adjacent(g.order() + a, v));
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      std::size_t motif_nbrs = 0;
      for (Vertex u : vs) motif_nbrs += g.adjacent(u, v) ? 1 : 0;
      const std::size_t extra = motif.contains(v) ? 0 : motif_nbrs;
      EXPECT_EQ(out.degree(v), g.degree(v) + extra);
    }
    expect_sound(r, "random motif");
  }
}

TEST(MotifSystem, EdgeMotifClosedForm) {
  // 1 -+ 1/sqrt(a b) for an edge with host degrees (a, b).
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_connected(10 + seed % 15, 0.2, seed + 40);
    const auto [u, v] = g.edges()[seed % g.edge_count()];
    const double d = 1.0 / std::sqrt(double(g.degree(u)) * double(g.degree(v)));
    const auto sol = motif_doubling_eigenvalues(Motif(g, {u, v}));
    ASSERT_EQ(sol.size(), 2u);
    EXPECT_NEAR(sol[0].lambda, 1.0 - d, 1e-12);
    EXPECT_NEAR(sol[1].lambda, 1.0 + d, 1e-12);
  }
}

TEST(MotifSystem, PathMotifClosedForm) {
  // Host: 0-1-2 path motif with degrees (2, 4, 3).
  const Graph g = g_of(6, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}});
  const Motif motif(g, {0, 1, 2});
  EXPECT_EQ(motif.host_degrees(), (std::vector<std::size_t>{2, 4, 3}));
  const double r = std::sqrt((2.0 + 3.0) / (2.0 * 4.0 * 3.0));
  const auto sol = motif_doubling_eigenvalues(motif);
  ASSERT_EQ(sol.size(), 3u);
  EXPECT_NEAR(sol[0].lambda, 1.0 - r, 1e-12);
  EXPECT_NEAR(sol[1].lambda, 1.0, 1e-12);
  EXPECT_NEAR(sol[2].lambda, 1.0 + r, 1e-12);
}

TEST(MotifSystem, UniformDegreePath) {
  for (std::size_t k = 2; k <= 5; ++k) {
    // Three consecutive vertices of a k-regular circulant are a path motif
    // only for k = 2; use the cycle for k = 2 and K_{k,k} paths otherwise.
    const Graph g = k == 2 ? cycle_graph(6) : complete_bipartite_graph(k, k);
    const Motif motif = k == 2 ? Motif(g, {0, 1, 2}) : Motif(g, {0, k, 1});
    const auto sol = motif_doubling_eigenvalues(motif);
    const double r = std::sqrt(2.0) / double(k);
    EXPECT_NEAR(sol[0].lambda, 1.0 - r, 1e-12) << k;
    EXPECT_NEAR(sol[1].lambda, 1.0, 1e-12) << k;
    EXPECT_NEAR(sol[2].lambda, 1.0 + r, 1e-12) << k;
  }
}

TEST(MotifSystem, SolutionsAnnihilateTheMatrix) {
  std::mt19937_64 rng(4);
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_connected(12, 0.35, seed + 70);
    std::vector<Vertex> vs = iota(g.order());
    std::shuffle(vs.begin(), vs.end(), rng);
    vs.resize(1 + seed % 6);
    const Motif motif(g, vs);
    const MotifSystem sys(motif);
    const auto sol = sys.solve();
    ASSERT_EQ(sol.size(), vs.size());
    for (const auto& s : sol) {
      double worst = 0.0;
      for (double x : sys.apply(s.lambda, s.f)) worst = std::max(worst, std::fabs(x));
      EXPECT_LE(worst, 1e-12);
      EXPECT_NEAR(*std::max_element(s.f.begin(), s.f.end(), [](double a, double b) {
                    return std::fabs(a) < std::fabs(b);
                  }),
                  1.0, 1e-15);
    }
    // Host degrees, not motif-internal degrees, sit on the diagonal.
    const auto a = sys.matrix(2.0);
    for (std::size_t i = 0; i < vs.size(); ++i) EXPECT_EQ(a(i, i), double(g.degree(vs[i])));
  }
}

TEST(DoubleMotifRepeated, StarOfTriangles) {
  const Graph k3 = complete_graph(3);
  for (std::size_t i = 2; i <= 6; ++i) {
    const auto r = double_motif_repeated(Motif(k3, {1, 2}), i - 1);
    EXPECT_EQ(r.graph, star_of_triangles(i));
    const auto ev = oracle::laplacian_eigenvalues(r.graph);
    EXPECT_EQ(oracle::count_near(ev, 0.0, 1e-8), 1u);
    EXPECT_EQ(oracle::count_near(ev, 0.5, 1e-8), i - 1);
    EXPECT_EQ(oracle::count_near(ev, 1.5, 1e-8), i + 1);
    ASSERT_EQ(r.claims.size(), 2u);
    EXPECT_EQ(r.claims[0].multiplicity_at_least, i - 1);
    EXPECT_EQ(r.claims[1].multiplicity_at_least, i - 1);
    EXPECT_EQ(r.claims[0].provenance, i == 2 ? Provenance::kMotifDoublingLambda
                                             : Provenance::kRepeatedDoublingLambda);
    expect_sound(r, "star of triangles");
  }
}

TEST(DoubleMotifRepeated, EigenfunctionPattern) {
  const Graph k3 = complete_graph(3);
  const auto r = double_motif_repeated(Motif(k3, {1, 2}), 3);
  const auto* c = find_claim(r, 1.5);
  ASSERT_NE(c, nullptr);
  // F = [1, -1] on the motif; copy j gets -j F, earlier copies F.
  EXPECT_EQ(c->eigenfunctions[0], (std::vector<double>{0, 1, -1, -1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(c->eigenfunctions[1], (std::vector<double>{0, 1, -1, 1, -1, -2, 2, 0, 0}));
  EXPECT_EQ(c->eigenfunctions[2], (std::vector<double>{0, 1, -1, 1, -1, 1, -1, -3, 3}));
}

TEST(DoubleMotifRepeated, OnceEqualsDoubleMotif) {
  const Graph g = oracle::random_connected(9, 0.4, 3);
  const Motif motif(g, {0, 3, 5});
  const auto a = double_motif_repeated(motif, 1);
  const auto b = double_motif(motif);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.claims, b.claims);
}

TEST(DoubleMotifRepeated, SingleVertexMatchesVertexDoubling) {
  const Graph c4 = cycle_graph(4);
  const auto a = double_motif_repeated(Motif(c4, {1}), 2);
  const auto b = double_vertex_repeated(c4, 1, 2);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.map, b.map);
  ASSERT_EQ(a.claims.size(), 1u);
  EXPECT_EQ(a.claims[0].eigenfunctions, b.claims[0].eigenfunctions);
  EXPECT_EQ(a.claims[0].provenance, b.claims[0].provenance);
}

TEST(DoubleMotifRepeated, WholeComponentSkipsZero) {
  const Graph k3 = complete_graph(3);
  const auto r = double_motif_repeated(Motif(k3, {0, 1, 2}), 2);
  for (const auto& c : r.claims) EXPECT_GT(std::fabs(c.lambda), 1e-8);
}

// ---------------------------------------------------------------------------
// Coupling

TEST(Couple, TriangleQuadrilateral) {
  const std::vector<std::vector<double>> f1{{1, 0, -1, 0}, {0, 1, 0, -1}};
  const auto r = couple_via_neighbors(complete_graph(3), cycle_graph(4), 2, 0, f1);
  EXPECT_EQ(r.graph, g_of(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}, {2, 4}, {2, 6}}));
  ASSERT_EQ(r.claims.size(), 1u);
  EXPECT_EQ(r.claims[0].multiplicity_at_least, 2u);
  EXPECT_EQ(r.claims[0].provenance, Provenance::kCoupling1);
  EXPECT_EQ(r.claims[0].eigenfunctions[0], (std::vector<double>{0, 0, 0, 1, 0, -1, 0}));
  EXPECT_EQ(r.claims[0].eigenfunctions[1], (std::vector<double>{0, 0, 0, 0, 1, 0, -1}));
  EXPECT_EQ(oracle::count_near(oracle::laplacian_eigenvalues(r.graph), 1.0, 1e-8), 2u);
  expect_sound(r, "triangle+quadrilateral");
}

TEST(Couple, SingleVertexWithPathLeafGivesStar) {
  const std::vector<std::vector<double>> f1{{1, 0, -1}};
  const auto r = couple_via_neighbors(g_of(1, {}), path_graph(3), 0, 0, f1);
  EXPECT_EQ(r.graph, g_of(4, {{1, 2}, {2, 3}, {0, 2}}));
  const auto ev = oracle::laplacian_eigenvalues(r.graph);
  EXPECT_EQ(oracle::count_near(ev, 0.0, 1e-8), 1u);
  EXPECT_EQ(oracle::count_near(ev, 1.0, 1e-8), 2u);
  EXPECT_EQ(oracle::count_near(ev, 2.0, 1e-8), 1u);
  expect_sound(r, "K1 + P3 leaf");
}

TEST(Couple, SingleVertexWithPathCenterGivesFourCycle) {
  // Joining q to the neighbors of the center closes a 4-cycle instead of a
  // star; the multiplicities happen to coincide.
  const std::vector<std::vector<double>> f1{{1, 0, -1}};
  const auto r = couple_via_neighbors(g_of(1, {}), path_graph(3), 0, 1, f1);
  EXPECT_EQ(r.graph, g_of(4, {{1, 2}, {2, 3}, {0, 1}, {0, 3}}));
  const auto ev = oracle::laplacian_eigenvalues(r.graph);
  EXPECT_EQ(oracle::count_near(ev, 0.0, 1e-8), 1u);
  EXPECT_EQ(oracle::count_near(ev, 1.0, 1e-8), 2u);
  EXPECT_EQ(oracle::count_near(ev, 2.0, 1e-8), 1u);
}

TEST(Couple, TrianglePathCenter) {
  const std::vector<std::vector<double>> f1{{1, 0, -1}};
  for (Vertex q = 0; q < 3; ++q) {
    const auto r = couple_via_neighbors(complete_graph(3), path_graph(3), q, 1, f1);
    ASSERT_EQ(r.claims.size(), 1u);
    expect_sound(r, "K3 + P3 center");
  }
}

TEST(Couple, RejectsBadEigenfunctions) {
  const Graph c4 = cycle_graph(4);
  const std::vector<std::vector<double>> not_eigen{{1, 0, 0, 0}};
  EXPECT_THROW(couple_via_neighbors(complete_graph(3), c4, 0, 0, not_eigen), PreconditionError);
  const std::vector<std::vector<double>> dependent{{1, 0, -1, 0}, {-2, 0, 2, 0}};
  EXPECT_THROW(couple_via_neighbors(complete_graph(3), c4, 0, 0, dependent), InvalidArgument);
  const std::vector<std::vector<double>> short_vec{{1, 0, -1}};
  EXPECT_THROW(couple_via_neighbors(complete_graph(3), c4, 0, 0, short_vec), InvalidArgument);
  EXPECT_THROW(couple_via_neighbors(complete_graph(3), c4, 3, 0, {}), InvalidArgument);
}

TEST(Couple, EmptyEigenfunctionSetWarns) {
  const auto r = couple_via_neighbors(complete_graph(3), cycle_graph(4), 0, 0, {});
  EXPECT_TRUE(r.claims.empty());
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Couple, TransfersTheWholeEigenvalueOneSpace) {
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    const Graph base = oracle::random_connected(6 + seed % 6, 0.3, seed + 900);
    const Graph attachment = double_vertex_repeated(base, seed % base.order(), 2).graph;
    const Graph host = oracle::random_connected(3 + seed % 5, 0.4, seed + 950);
    const auto f1 = eigenvalue_one_basis(attachment);
    const auto r = couple_via_neighbors(host, attachment, seed % host.order(), (seed * 3) % attachment.order(), f1);
    const auto m1_before = oracle::count_near(oracle::laplacian_eigenvalues(attachment), 1.0, 1e-8);
    const auto m1_after = oracle::count_near(oracle::laplacian_eigenvalues(r.graph), 1.0, 1e-8);
    EXPECT_GE(m1_after, m1_before) << seed;
    expect_sound(r, "coupling transfer");
  }
}

// ---------------------------------------------------------------------------
// Attachment

TEST(Attach, EdgeOnEdge) {
  const auto r = attach_subgraph(complete_graph(2), complete_graph(2), {0, 1}, 0);
  const auto* c = find_claim(r, 1.5);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->exact, Rational(3, 2));
  EXPECT_EQ(c->provenance, Provenance::kAttachCor2);
  ASSERT_EQ(c->multiplicity_at_least, 1u);
  EXPECT_TRUE(proportional(c->eigenfunctions[0], {0, 0, 1, -1}));
  expect_sound(r, "K2+K2");
}

TEST(Attach, CompleteGraphOnAnyHost) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::uint32_t seed = 0; seed < 3; ++seed) {
      const Graph host = oracle::random_connected(4 + seed, 0.4, seed + 10 * n);
      const auto r = attach_subgraph(host, complete_graph(n), iota(n), seed % host.order());
      const auto* c = find_claim(r, double(n + 1) / double(n));
      ASSERT_NE(c, nullptr) << n;
      EXPECT_EQ(c->multiplicity_at_least, n - 1);
      EXPECT_EQ(c->exact, Rational(n + 1, n));
      for (const auto& f : c->eigenfunctions) {
        for (Vertex v = 0; v < host.order(); ++v) EXPECT_EQ(f[v], 0.0);
      }
      expect_sound(r, "K_n attach");
    }
  }
}

TEST(Attach, CycleOnOppositeVertices) {
  // The zero-sum condition on {0, 2} admits span{e0 - e2, e1 - e3}; the
  // alternating vector sums to 2 on {0, 2} and is not a claim.
  const auto r = attach_subgraph(complete_graph(3), cycle_graph(4), {0, 2}, 1);
  const auto* c = find_claim(r, 1.0);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->multiplicity_at_least, 2u);
  EXPECT_EQ(oracle::rank({c->eigenfunctions[0], c->eigenfunctions[1], {0, 0, 0, 1, 0, -1, 0}}), 2u);
  EXPECT_EQ(oracle::rank({c->eigenfunctions[0], c->eigenfunctions[1], {0, 0, 0, 0, 1, 0, -1}}), 2u);
  expect_sound(r, "C4 opposite");
}

TEST(Attach, RejectsBadInputs) {
  EXPECT_THROW(attach_subgraph(complete_graph(3), complete_graph(2), {}, 0), InvalidArgument);
  EXPECT_THROW(attach_subgraph(complete_graph(3), complete_graph(2), {0, 2}, 0), InvalidArgument);
  EXPECT_THROW(attach_subgraph(complete_graph(3), complete_graph(2), {0, 0}, 0), InvalidArgument);
  EXPECT_THROW(attach_subgraph(complete_graph(3), complete_graph(2), {0}, 3), InvalidArgument);
  const std::vector<Vertex> dup{0, 0};
  EXPECT_THROW(attach_subgraph_multi_anchor(complete_graph(3), complete_graph(2), {0, 1}, dup), InvalidArgument);
}

TEST(AttachMultiAnchor, CompleteOnTwoAnchors) {
  const std::vector<Vertex> anchors{0, 1};
  const auto r = attach_subgraph_multi_anchor(complete_graph(2), complete_graph(3), {0, 1, 2}, anchors);
  const auto* c = find_claim(r, 5.0 / 4.0);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->multiplicity_at_least, 2u);
  EXPECT_EQ(c->provenance, Provenance::kAttachCor4);
  expect_sound(r, "K3 on two anchors");
}

TEST(AttachMultiAnchor, FormulaForKAnchors) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const Graph host = cycle_graph(5);
      const auto anchors = iota(k);
      const auto r = attach_subgraph_multi_anchor(host, complete_graph(n), iota(n), anchors);
      const auto* c = find_claim(r, double(n + k) / double(n + k - 1));
      ASSERT_NE(c, nullptr) << n << "," << k;
      EXPECT_GE(c->multiplicity_at_least, n - 1);
      expect_sound(r, "multi-anchor");
    }
  }
}

TEST(AttachMultiAnchor, OneAnchorEqualsAttach) {
  const Graph host = oracle::random_connected(7, 0.3, 77);
  const std::vector<Vertex> anchors{3};
  const auto a = attach_subgraph_multi_anchor(host, cycle_graph(5), {0, 2, 3}, anchors);
  const auto b = attach_subgraph(host, cycle_graph(5), {0, 2, 3}, 3);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.claims, b.claims);
}

TEST(AttachMultiAnchor, EdgeOnAdjacentCycleVertices) {
  const std::vector<Vertex> anchors{0, 1};
  const auto r = attach_subgraph_multi_anchor(cycle_graph(4), complete_graph(2), {0, 1}, anchors);
  ASSERT_EQ(r.claims.size(), 1u);
  EXPECT_NEAR(r.claims[0].lambda, 4.0 / 3.0, 1e-12);
  EXPECT_EQ(r.claims[0].multiplicity_at_least, 1u);
  EXPECT_TRUE(proportional(r.claims[0].eigenfunctions[0], {0, 0, 0, 0, 1, -1}));
  expect_sound(r, "C4 + K2");
}

TEST(AttachMulti, SingleAssignmentEqualsAttach) {
  const Graph host = oracle::random_connected(6, 0.4, 12);
  const std::vector<Assignment> one{{{1, 2}, 4}};
  const auto a = attach_multi_subgraphs(host, complete_graph(4), one);
  const auto b = attach_subgraph(host, complete_graph(4), {1, 2}, 4);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.claims, b.claims);
}

TEST(AttachMulti, EquitablePartition) {
  // Every C4 vertex lies in exactly two subsets of size two.
  std::vector<Assignment> assignments;
  for (Vertex i = 0; i < 4; ++i) assignments.push_back({{i, (i + 1) % 4}, i});
  const auto r = attach_multi_subgraphs(cycle_graph(4), cycle_graph(4), assignments);
  for (Vertex v = 4; v < 8; ++v) EXPECT_EQ(r.graph.degree(v), 4u);
  const auto* c = find_claim(r, 1.5);
  ASSERT_NE(c, nullptr);
  EXPECT_TRUE(proportional(c->eigenfunctions[0], {0, 0, 0, 0, 1, -1, 1, -1}));
  EXPECT_FALSE(r.warnings.empty());
  expect_sound(r, "equitable");
}

TEST(AttachMulti, PathHostWithTwoSubsets) {
  const std::vector<Assignment> assignments{{{0, 2}, 0}, {{0, 1, 2}, 1}};
  const auto r = attach_multi_subgraphs(path_graph(2), cycle_graph(4), assignments);
  const auto* c = find_claim(r, 1.0);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->multiplicity_at_least, 1u);
  EXPECT_EQ(c->provenance, Provenance::kAttachTh4);
  expect_sound(r, "P2 + C4");
}

TEST(AttachMulti, OverlappingPairsAdmitNoEigenvalueOneClaim) {
  const std::vector<Assignment> assignments{{{0, 1}, 0}, {{1, 2}, 1}};
  const auto r = attach_multi_subgraphs(path_graph(2), cycle_graph(4), assignments);
  EXPECT_EQ(find_claim(r, 1.0), nullptr);
  expect_sound(r, "overlapping pairs");
}

TEST(AttachMulti, ZeroSumGateBlocksViolatingCandidates) {
  // A single connector: every candidate eigenvector of the degree-adjusted
  // K_2 is nonzero at vertex 0, so no claim may be emitted.
  const auto r = attach_subgraph(complete_graph(3), complete_graph(2), {0}, 0);
  EXPECT_TRUE(r.claims.empty());

  // Same for a path with a connector at one end.
  const auto r2 = attach_subgraph(complete_graph(3), path_graph(3), {0}, 0);
  for (const auto& c : r2.claims) {
    for (const auto& f : c.eigenfunctions) EXPECT_NEAR(f[3], 0.0, 1e-12);
  }
  expect_sound(r2, "end connector");
}

TEST(ValidateAttachment, AcceptsAndRejects) {
  const std::vector<Assignment> both{{{0, 1}, 0}};
  const std::vector<double> f{1, -1};
  const auto c = validate_attachment_candidate(complete_graph(2), complete_graph(2), both, 1.5, f);
  EXPECT_EQ(c.eigenfunctions[0], (std::vector<double>{0, 0, 1, -1}));
  EXPECT_EQ(c.exact, Rational(3, 2));

  try {
    validate_attachment_candidate(complete_graph(2), complete_graph(2), both, 1.4, f);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("restricted eigenvalue equation"), std::string::npos);
  }
  const std::vector<Assignment> one{{{0}, 0}};
  EXPECT_THROW(validate_attachment_candidate(complete_graph(2), complete_graph(2), one, 1.5, f),
               PreconditionError);
  EXPECT_THROW(validate_attachment_candidate(complete_graph(2), complete_graph(2), both, 1.5,
                                             std::vector<double>{0, 0}),
               InvalidArgument);
}

// ---------------------------------------------------------------------------
// Duplicate classes and kites

TEST(DuplicateClassClaims, StarLeaves) {
  const auto r = duplicate_class_claims(star_graph(3));
  EXPECT_EQ(r.graph, star_graph(3));
  ASSERT_EQ(r.claims.size(), 1u);
  EXPECT_EQ(r.claims[0].multiplicity_at_least, 2u);
  EXPECT_EQ(r.claims[0].provenance, Provenance::kDuplicateClass);
  expect_sound(r, "K13 classes");
}

TEST(KiteTail, SumRelation) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto t = kite_tail_relation(m, n, laplacian_spectrum(kite_graph(m, n)));
      EXPECT_TRUE(t.holds) << m << "," << n;
      EXPECT_NEAR(t.expected_sum, 1.0 + 1.0 / m + 1.0 / n, 1e-15);
      EXPECT_NEAR(t.lambda_beta + t.lambda_gamma, t.expected_sum, 1e-8);
    }
  }
  const auto t = kite_tail_relation(2, 3, laplacian_spectrum(kite_graph(2, 3)));
  EXPECT_NEAR(t.expected_sum, 11.0 / 6.0, 1e-15);
}

TEST(KiteTail, RejectsForeignSpectrum) {
  EXPECT_THROW(kite_tail_relation(3, 3, laplacian_spectrum(cycle_graph(7))), InvalidArgument);
  EXPECT_THROW(kite_tail_relation(2, 2, laplacian_spectrum(cycle_graph(4))), InvalidArgument);
}

// ---------------------------------------------------------------------------
// Universal soundness with the test-side oracle

TEST(ClaimSoundness, RandomizedOperations) {
  std::mt19937_64 rng(2026);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected(pick(4, 30), 0.15, static_cast<std::uint32_t>(trial));
    std::vector<Vertex> vs = iota(g.order());
    std::shuffle(vs.begin(), vs.end(), rng);
    switch (trial % 4) {
      case 0:
        expect_sound(double_vertex_repeated(g, vs[0], pick(1, 4)), "vertex");
        break;
      case 1: {
        vs.resize(pick(1, 6));
        expect_sound(double_motif_repeated(Motif(g, vs), pick(1, 4)), "motif");
        break;
      }
      case 2: {
        const Graph sigma = oracle::random_connected(pick(2, 6), 0.5, static_cast<std::uint32_t>(trial + 1000));
        std::vector<Vertex> sub = iota(sigma.order());
        std::shuffle(sub.begin(), sub.end(), rng);
        sub.resize(pick(1, sub.size()));
        expect_sound(attach_subgraph(g, sigma, sub, vs[0]), "attach");
        break;
      }
      default:
        expect_sound(duplicate_class_claims(g), "classes");
    }
  }
}
