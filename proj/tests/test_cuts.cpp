#include "gxp/cuts.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gxp/graph.hpp"

using namespace gxp;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.insert_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.insert_edge(i, j);
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

// Independent oracle: direct subset scan, no incremental tricks.
std::pair<Rat, Rat> naive_conductance_and_expansion(const Graph& g) {
  int n = g.vertex_count();
  Rat best_phi(std::numeric_limits<std::int64_t>::max() / 4);
  Rat best_h = best_phi;
  std::int64_t total = g.volume();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::int64_t boundary = 0, vol = 0;
    int size = 0;
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1)) continue;
      ++size;
      vol += g.degree(v);
      for (int w : g.neighbors(v))
        if (!((mask >> w) & 1)) ++boundary;
    }
    std::int64_t mv = std::min(vol, total - vol);
    Rat phi = mv == 0 ? Rat(0) : Rat(boundary, mv);
    best_phi = std::min(best_phi, phi);
    if (2 * size <= n) best_h = std::min(best_h, Rat(boundary, size));
  }
  return {best_phi, best_h};
}

}  // namespace

TEST(CutConductance, FourCycleAdjacentPair) {
  Graph g = cycle(4);
  EXPECT_EQ(cut_conductance(g, Cut{{0, 1}}), Rat(1, 2));
}

TEST(CutConductance, SingletonInClique) {
  Graph g = complete(4);
  EXPECT_EQ(cut_conductance(g, Cut{{0}}), Rat(1));
}

TEST(CutConductance, ZeroVolumeRule) {
  Graph g(4);
  g.insert_edge(2, 3);
  EXPECT_EQ(cut_conductance(g, Cut{{0}}), Rat(0));
}

TEST(CutConductance, ComplementSymmetry) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(7, 0.5, rng);
    std::vector<int> side, comp;
    for (int v = 0; v < 7; ++v) (rng() % 2 ? side : comp).push_back(v);
    if (side.empty() || comp.empty()) continue;
    EXPECT_EQ(cut_conductance(g, Cut{side}), cut_conductance(g, Cut{comp}));
  }
}

TEST(CutConductance, RejectsImproperCuts) {
  Graph g = cycle(4);
  EXPECT_THROW(cut_conductance(g, Cut{{}}), InvalidCut);
  EXPECT_THROW(cut_conductance(g, Cut{{0, 1, 2, 3}}), InvalidCut);
}

TEST(ExactConductance, FourCycle) {
  auto [phi, cut] = exact_conductance(cycle(4));
  EXPECT_EQ(phi, Rat(1, 2));
  EXPECT_EQ(cut_conductance(cycle(4), cut), phi);
}

TEST(ExactConductance, TwoTriangles) {
  Graph g(6);
  g.insert_edge(0, 1);
  g.insert_edge(1, 2);
  g.insert_edge(0, 2);
  g.insert_edge(3, 4);
  g.insert_edge(4, 5);
  g.insert_edge(3, 5);
  auto [phi, cut] = exact_conductance(g);
  EXPECT_EQ(phi, Rat(0));
}

TEST(ExactConductance, CompleteFour) {
  // Minimum over all cuts of K4: singletons give 1, balanced cuts 4/6.
  auto [phi, cut] = exact_conductance(complete(4));
  EXPECT_EQ(phi, Rat(2, 3));
  EXPECT_EQ(cut.side.size(), 2u);
}

TEST(ExactConductance, GuardRails) {
  Graph g(1);
  EXPECT_THROW(exact_conductance(g), InvalidInput);
  Graph big(27);
  EXPECT_THROW(exact_conductance(big), TooLargeForExact);
}

TEST(ExactConductance, MinimumAgainstRandomCuts) {
  std::mt19937 rng(23);
  Graph g = random_graph(10, 0.4, rng);
  auto [phi, cut] = exact_conductance(g);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> side;
    for (int v = 0; v < 10; ++v)
      if (rng() % 2) side.push_back(v);
    if (side.empty() || side.size() == 10) continue;
    EXPECT_LE(phi, cut_conductance(g, Cut{side}));
  }
}

TEST(ExactEdgeExpansion, FourCycle) {
  auto [h, cut] = exact_edge_expansion(cycle(4));
  EXPECT_EQ(h, Rat(1));
}

TEST(ExactEdgeExpansion, Star) {
  Graph g(4);
  g.insert_edge(0, 1);
  g.insert_edge(0, 2);
  g.insert_edge(0, 3);
  auto [h, cut] = exact_edge_expansion(g);
  EXPECT_EQ(h, Rat(1));
}

TEST(ExactEdgeExpansion, DisconnectedIsZero) {
  Graph g(4);
  g.insert_edge(0, 1);
  g.insert_edge(2, 3);
  auto [h, cut] = exact_edge_expansion(g);
  EXPECT_EQ(h, Rat(0));
}

TEST(Enumeration, MatchesNaiveOracle) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.45, rng);
    auto [phi_naive, h_naive] = naive_conductance_and_expansion(g);
    auto [phi, pcut] = exact_conductance(g);
    auto [h, hcut] = exact_edge_expansion(g);
    EXPECT_EQ(phi, phi_naive);
    EXPECT_EQ(h, h_naive);
    // Witnesses reproduce the reported values.
    EXPECT_EQ(cut_conductance(g, pcut), phi);
  }
}

TEST(RegularGraphs, ExpansionConductanceExchange) {
  // For d-regular g: h/d <= phi (the two notions are interchangeable).
  for (int n : {4, 6, 8}) {
    Graph g = cycle(n);  // 2-regular
    auto [phi, pc] = exact_conductance(g);
    auto [h, hc] = exact_edge_expansion(g);
    EXPECT_LE(h / 2, phi);
    EXPECT_EQ(h / 2, phi);  // exact equality on vertex-transitive cycles
  }
  Graph k5 = complete(5);
  auto [phi, pc] = exact_conductance(k5);
  auto [h, hc] = exact_edge_expansion(k5);
  EXPECT_LE(h / 4, phi);
}
