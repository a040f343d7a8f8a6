#include "gxp/gadget.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gxp/cuts.hpp"
#include "gxp/spectral.hpp"

using namespace gxp;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.insert_edge(i, i + 1);
  return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.insert_edge(i, j);
  return g;
}

}  // namespace

TEST(RoundRobin, TwoIsolatedVerticesOnFourSlots) {
  Graph g(2);
  auto slots = round_robin_allocate(g, 4, Rat(1));
  ASSERT_EQ(slots.size(), 2u);
  EXPECT_EQ(slots[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(slots[1], (std::vector<int>{3, 0, 1}));
  // Slot loads (2,2,1,1).
  std::vector<int> load(4, 0);
  for (const auto& s : slots)
    for (int x : s) ++load[x];
  EXPECT_EQ(load, (std::vector<int>{2, 2, 1, 1}));
}

TEST(RoundRobin, PlainTotalIsTwoMPlusThreeN) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, 0.4, rng);
    auto slots = round_robin_allocate(g, n + 2, Rat(1));
    std::int64_t total = 0;
    for (const auto& s : slots) total += s.size();
    EXPECT_EQ(total, 2 * g.edge_count() + 3 * n);
  }
}

TEST(RoundRobin, LoadsWithinOne) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, 0.5, rng);
    int n_side = n + 2;
    auto slots = round_robin_allocate(g, n_side, Rat(1));
    std::vector<int> load(n_side, 0);
    for (const auto& s : slots)
      for (int x : s) ++load[x];
    auto [mn, mx] = std::minmax_element(load.begin(), load.end());
    EXPECT_LE(*mx - *mn, 1);
  }
}

TEST(RoundRobin, InfeasibleWhenQuotaExceedsSlots) {
  Graph g(2);
  g.insert_edge(0, 1);  // quota 4 each
  EXPECT_THROW(round_robin_allocate(g, 3, Rat(1)), AllocationInfeasible);
  EXPECT_NO_THROW(round_robin_allocate(g, 4, Rat(1)));  // quota == N is fine
}

TEST(CoreGadget, PathFourDegreeFormula) {
  // n=4, m=3: d = ceil((2m+3n)/N) = ceil(18/6) = 3.
  Graph g = path(4);
  auto xg = build_core_gadget(g, GadgetParams{});
  EXPECT_EQ(xg.n_side, 6);
  EXPECT_EQ(xg.expander_degree, 3);
  EXPECT_EQ(xg.blowup_vertices, 12);
  // Plain-mode edge blowup: (2m+3n) + N*d_X.
  EXPECT_EQ(xg.blowup_edges, 18 + 6 * 3);
  EXPECT_LE(std::int64_t(xg.n_side) * xg.expander_degree,
            2 * g.edge_count() + 3 * g.vertex_count() + xg.n_side);
}

TEST(CoreGadget, ConductanceMeetsClaimOnSmallSamples) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_graph(6, (trial % 2) ? 0.3 : 0.8, rng);
    auto xg = build_core_gadget(g, GadgetParams{});
    auto [phi, cut] = exact_conductance(xg.graph);
    EXPECT_GE(phi, xg.conductance_claim) << "trial " << trial;
    EXPECT_GT(spectral_conductance_lower_bound(xg.graph), 0.0);
    // Plain-mode size bound when d_X comes straight from the formula.
    std::int64_t formula =
        std::max<std::int64_t>(3, ceil_div(2 * g.edge_count() + 3 * 6, xg.n_side));
    if (xg.expander_degree == formula)
      EXPECT_LE(std::int64_t(xg.n_side) * xg.expander_degree,
                2 * g.edge_count() + 3 * 6 + xg.n_side);
  }
}

TEST(CoreGadget, InducedSubgraphIsInput) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.5, rng);
    auto xg = build_core_gadget(g, GadgetParams{});
    EXPECT_TRUE(induced_on_original(xg) == g);
  }
}

TEST(CoreGadget, DegreesOfOriginalVerticesArePreserved) {
  std::mt19937 rng(47);
  Graph g = random_graph(8, 0.5, rng);
  auto xg = build_core_gadget(g, GadgetParams{});
  int delta = 0;
  for (int v = 0; v < 8; ++v) delta = std::max(delta, g.degree(v));
  for (int v = 0; v < 8; ++v) {
    EXPECT_EQ(xg.graph.degree(v), 2 * g.degree(v) + 3);
    EXPECT_LE(xg.graph.degree(v), 2 * delta + 3);
  }
  // Gadget-side degrees stay within allocation ceiling + d_X.
  for (int x : xg.vertices_with_role(Role::L))
    EXPECT_LE(xg.graph.degree(x), 2 * xg.expander_degree);
}

TEST(CoreGadget, IsolatedVerticesGetMinimumDegreeThree) {
  Graph g(5);  // edgeless
  auto xg = build_core_gadget(g, GadgetParams{});
  for (int v = 0; v < 5; ++v) EXPECT_EQ(xg.graph.degree(v), 3);
  auto check = check_robust_preconditions(xg);
  EXPECT_TRUE(check.ok) << check.detail;
}

TEST(CoreGadget, RobustPreconditionsHoldOnEveryBuild) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_graph(7, 0.4, rng);
    auto xg = build_core_gadget(g, GadgetParams{});
    auto check = check_robust_preconditions(xg);
    EXPECT_TRUE(check.ok) << check.detail;
  }
}

TEST(CoreGadget, PlainForcesUnitParameters) {
  GadgetParams p;
  p.mode = GadgetParams::Mode::plain;
  p.eps = Rat(1, 2);
  EXPECT_THROW(build_core_gadget(path(4), p), InvalidInput);
}

TEST(TradeoffGadget, SideSizeFormula) {
  // eps = 1/4, delta = 1/2, n = 40: N = ceil(40/2) + 2 = 22, so 44 added.
  Graph g(40);
  auto xg = build_tradeoff_gadget(g, Rat(1, 4), Rat(1, 2));
  EXPECT_EQ(xg.n_side, 22);
  EXPECT_EQ(xg.blowup_vertices, 44);
}

TEST(TradeoffGadget, EdgeBlowupBound) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 8 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.5, rng);
    Rat eps(1, 4), delta(1, 2);
    auto xg = build_tradeoff_gadget(g, eps, delta);
    // <= (2 eps m + 4n) + N d_X
    Rat bound = 2 * eps * Rat(g.edge_count()) + Rat(4 * n) +
                Rat(std::int64_t(xg.n_side) * xg.expander_degree);
    EXPECT_LE(Rat(xg.blowup_edges), bound);
    EXPECT_EQ(xg.blowup_vertices, 2 * xg.n_side);
  }
}

TEST(TradeoffGadget, ConductanceMeetsRobustClaim) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = random_graph(6, 0.35, rng);
    auto xg = build_tradeoff_gadget(g, Rat(1, 2), Rat(1));
    auto [phi, cut] = exact_conductance(xg.graph);
    EXPECT_GE(phi, xg.conductance_claim);
    EXPECT_EQ(xg.conductance_claim,
              robust_conductance_claim(xg.cert_phi, Rat(1, 2), xg.alpha));
  }
}

TEST(TradeoffGadget, ParameterValidation) {
  Graph g = path(4);
  EXPECT_THROW(build_tradeoff_gadget(g, Rat(0), Rat(1)), InvalidInput);
  EXPECT_THROW(build_tradeoff_gadget(g, Rat(1, 2), Rat(1, 4)), InvalidInput);
  EXPECT_THROW(build_tradeoff_gadget(g, Rat(2), Rat(2)), InvalidInput);
}

TEST(TradeoffGadget, InfeasibleAllocationSurfaces) {
  std::mt19937 rng(67);
  Graph g = random_graph(12, 1.0, rng);  // K12: quota ceil(11/6)+3 = 5 > N = 4
  EXPECT_THROW(build_tradeoff_gadget(g, Rat(1, 6), Rat(1, 6)), AllocationInfeasible);
}

TEST(BipartiteGadget, SingleEdgeStaysTwoColorable) {
  Graph g(2);
  g.insert_edge(0, 1);
  auto xg = build_bipartite_core_gadget(g);
  EXPECT_FALSE(xg.graph.bipartition().empty());
}

TEST(BipartiteGadget, OddCycleRejected) {
  Graph g(3);
  g.insert_edge(0, 1);
  g.insert_edge(1, 2);
  g.insert_edge(0, 2);
  EXPECT_THROW(build_bipartite_core_gadget(g), NotBipartite);
}

TEST(BipartiteGadget, ConductanceMeetsClaimOnBipartiteSamples) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g(8);
    for (int i = 0; i < 4; ++i)
      for (int j = 4; j < 8; ++j)
        if (rng() % 2) g.insert_edge(i, j);
    auto xg = build_bipartite_core_gadget(g);
    EXPECT_FALSE(xg.graph.bipartition().empty());
    if (xg.graph.vertex_count() <= 26) {
      auto [phi, cut] = exact_conductance(xg.graph);
      EXPECT_GE(phi, xg.conductance_claim);
    } else {
      EXPECT_GT(spectral_conductance_lower_bound(xg.graph), 0.0);
    }
  }
}

TEST(BipartiteGadget, DeclaredPartsAreValidated) {
  Graph g(2);
  g.insert_edge(0, 1);
  EXPECT_THROW(build_bipartite_core_gadget(g, {0, 0}), NotBipartite);
  auto xg = build_bipartite_core_gadget(g, {0, 1});
  EXPECT_TRUE(induced_on_original(xg) == g);
}

TEST(Claims, FormulaShapes) {
  EXPECT_EQ(plain_conductance_claim(Rat(1, 2)), Rat(1, 20));
  EXPECT_EQ(plain_conductance_claim(Rat(3)), Rat(1, 5));  // capped by the second proof case
  EXPECT_EQ(robust_conductance_claim(Rat(1, 10), Rat(1, 2), Rat(2)), Rat(1, 200));
}
