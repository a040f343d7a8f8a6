#include "gxp/expander.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "gxp/io.hpp"

using namespace gxp;

TEST(BuildExpander, SmallCertifiedExactly) {
  // 2N <= 26 goes through exact enumeration; must meet the 1/20 target.
  for (auto [n_side, d] : {std::pair{8, 3}, {12, 3}, {8, 4}, {12, 4}}) {
    BipartiteExpander x = build_bipartite_expander(n_side, d);
    EXPECT_EQ(x.certificate.kind, Certificate::Kind::exact);
    EXPECT_TRUE(x.certificate.meets_target);
    EXPECT_GE(x.certificate.value, Rat(1, 20));
    Graph g = x.materialize();
    auto [h, cut] = exact_edge_expansion(g);
    EXPECT_EQ(h, x.certificate.value * d);
  }
}

TEST(BuildExpander, CompleteBipartiteCase) {
  BipartiteExpander x = build_bipartite_expander(8, 8);
  Graph g = x.materialize();
  EXPECT_EQ(g.edge_count(), 64);
  for (int v = 0; v < 16; ++v) EXPECT_EQ(g.degree(v), 8);
  // K_{8,8} reaches the extremal phi_X = 1/2 (balanced mixed cuts).
  EXPECT_EQ(x.certificate.value, Rat(1, 2));
}

TEST(BuildExpander, InfeasibleDegree) {
  EXPECT_THROW(build_bipartite_expander(4, 5), InfeasibleDegree);
  EXPECT_THROW(build_bipartite_expander(8, 2), InfeasibleDegree);
}

TEST(BuildExpander, Determinism) {
  BipartiteExpander a = build_bipartite_expander(16, 5);
  BipartiteExpander b = build_bipartite_expander(16, 5);
  EXPECT_EQ(a.matchings, b.matchings);
  EXPECT_TRUE(a.materialize() == b.materialize());
}

TEST(BuildExpander, RegularityAndSimplicity) {
  for (auto [n_side, d] : {std::pair{9, 3}, {11, 5}, {16, 5}, {25, 6}}) {
    BipartiteExpander x = build_bipartite_expander(n_side, d);
    Graph g = x.materialize();  // insert_edge throws on parallel edges
    for (int v = 0; v < 2 * n_side; ++v) EXPECT_EQ(g.degree(v), d) << "N=" << n_side;
  }
}

TEST(NeighborOracle, SlotZeroIsIdentity) {
  BipartiteExpander x = build_bipartite_expander(12, 4);
  for (int v = 0; v < 12; ++v) EXPECT_EQ(x.neighbor(v, 0), v);
}

TEST(NeighborOracle, PermutationPerSlot) {
  BipartiteExpander x = build_bipartite_expander(12, 4);
  for (int slot = 0; slot < 4; ++slot) {
    std::set<int> image;
    for (int v = 0; v < 12; ++v) image.insert(x.neighbor(v, slot));
    EXPECT_EQ(image.size(), 12u);  // injective
  }
}

TEST(NeighborOracle, DistinctAcrossSlots) {
  BipartiteExpander x = build_bipartite_expander(12, 4);
  for (int v = 0; v < 12; ++v) {
    std::set<int> nbrs;
    for (int slot = 0; slot < 4; ++slot) nbrs.insert(x.neighbor(v, slot));
    EXPECT_EQ(nbrs.size(), 4u);
  }
  EXPECT_THROW(x.neighbor(12, 0), InvalidIndex);
  EXPECT_THROW(x.neighbor(0, 4), InvalidIndex);
}

TEST(NeighborOracle, ConsistentWithMaterializedEdges) {
  BipartiteExpander x = build_bipartite_expander(10, 3);
  Graph g = x.materialize();
  for (int v = 0; v < 10; ++v)
    for (int slot = 0; slot < 3; ++slot)
      EXPECT_TRUE(g.has_edge(v, 10 + x.neighbor(v, slot)));
}

TEST(Serialization, HeaderCommentAndEdgeList) {
  BipartiteExpander x = build_bipartite_expander(8, 3);
  std::ostringstream out;
  write_bipartite_expander(out, x);
  std::string text = out.str();
  EXPECT_EQ(text.rfind("# bipartite N=8 d=3 phi=", 0), 0u);
  std::istringstream in(text);
  Graph g = parse_edge_list(in);  // comments are skipped by the parser
  EXPECT_TRUE(g == x.materialize());
}

TEST(Certify, MatchingFailsAnyPositiveTarget) {
  BipartiteExpander x;
  x.side_size = 6;
  x.degree = 1;
  x.matchings = {{0, 1, 2, 3, 4, 5}};
  Certificate c = certify_edge_expansion(x, Rat(1, 100));
  EXPECT_EQ(c.value, Rat(0));
  EXPECT_FALSE(c.meets_target);
}

TEST(Certify, CompleteBipartiteSpectralPath) {
  // 2N > 26 forces the sigma2 route; K_{N,N} certifies at ~1/2.
  int n_side = 16;
  BipartiteExpander x;
  x.side_size = n_side;
  x.degree = n_side;
  x.matchings.resize(n_side, std::vector<int>(n_side));
  for (int i = 0; i < n_side; ++i)
    for (int v = 0; v < n_side; ++v) x.matchings[i][v] = (v + i) % n_side;
  Certificate c = certify_edge_expansion(x, Rat(1, 20));
  EXPECT_EQ(c.kind, Certificate::Kind::spectral);
  EXPECT_TRUE(c.meets_target);
  EXPECT_GE(c.value, Rat(49, 100));
}

TEST(Certify, SpectralSoundAgainstExactOnSmallInstances) {
  // Soundness: the sigma2 bound never exceeds the true edge expansion.
  for (auto [n_side, d] : {std::pair{8, 3}, {10, 4}, {12, 5}, {13, 3}}) {
    BipartiteExpander x = build_bipartite_expander(n_side, d);
    Graph g = x.materialize();
    double sigma2 = second_singular_value_bipartite(g, x.left_side());
    double spectral_phi = (d - sigma2) / (2.0 * d);
    auto [h, cut] = exact_edge_expansion(g);
    EXPECT_LE(spectral_phi, to_double(h / d) + 1e-9) << n_side << " " << d;
  }
}

TEST(BuildExpander, MediumSpectralCertificates) {
  for (auto [n_side, d] : {std::pair{64, 5}, {100, 4}, {256, 6}, {257, 5}}) {
    BipartiteExpander x = build_bipartite_expander(n_side, d);
    EXPECT_EQ(x.certificate.kind, Certificate::Kind::spectral);
    EXPECT_TRUE(x.certificate.meets_target) << "N=" << n_side << " d=" << d;
    Graph g = x.materialize();
    for (int v = 0; v < 2 * n_side; ++v) EXPECT_EQ(g.degree(v), d);
  }
}

TEST(BuildExpander, SpectralTargetUnreachableAtDegreeThree) {
  // sigma2 >= 2 sqrt(d-1) caps the spectral certificate at ~0.029 for d=3,
  // so beyond enumeration scale an exact-degree request must fail fast...
  EXPECT_THROW(build_bipartite_expander(64, 3), CertificationFailed);
  // ...and the gadget-facing builder probes upward to a certifiable degree.
  BipartiteExpander x = build_certified_expander_at_least(202, 3);
  EXPECT_GE(x.degree, 4);
  EXPECT_TRUE(x.certificate.meets_target);
  BipartiteExpander small = build_certified_expander_at_least(8, 3);
  EXPECT_EQ(small.degree, 3);  // enumeration scale certifies d = 3 directly
}
