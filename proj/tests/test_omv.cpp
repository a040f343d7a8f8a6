#include "gxp/omv.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gxp/cuts.hpp"

using namespace gxp;

namespace {

std::vector<std::vector<int>> random_matrix(int k, double p, std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
  for (auto& row : m)
    for (auto& cell : row) cell = coin(rng) < p ? 1 : 0;
  return m;
}

std::vector<int> random_vector(int k, std::mt19937& rng) {
  std::vector<int> v(k);
  for (auto& b : v) b = static_cast<int>(rng() % 2);
  return v;
}

}  // namespace

TEST(OmvBuild, AllZeroMatrixStillConnects) {
  auto inst = omv_build(std::vector<std::vector<int>>(3, std::vector<int>(3, 0)));
  EXPECT_TRUE(inst.graph.connected());
  // s touches only its anchor; every query must come back >= 5.
  for (auto u : {std::vector<int>{0, 0, 0}, std::vector<int>{1, 1, 1}})
    EXPECT_EQ(omv_query(inst, u, {1, 0, 1}), OmvAnswer::dist_ge_5);
}

TEST(OmvBuild, IdentityMatrixProduct) {
  std::vector<std::vector<int>> eye(3, std::vector<int>(3, 0));
  for (int i = 0; i < 3; ++i) eye[i][i] = 1;
  auto inst = omv_build(eye);
  EXPECT_EQ(omv_query(inst, {0, 1, 0}, {0, 1, 0}), OmvAnswer::dist3);
  EXPECT_EQ(omv_query(inst, {0, 1, 0}, {1, 0, 1}), OmvAnswer::dist_ge_5);
}

TEST(OmvBuild, GraphIsBipartiteWithSAndT) {
  std::mt19937 rng(31);
  auto inst = omv_build(random_matrix(4, 0.4, rng));
  auto parts = inst.graph.bipartition();
  ASSERT_FALSE(parts.empty());
  EXPECT_NE(parts[inst.s], parts[inst.t]);  // distances stay odd
}

TEST(OmvBuild, AnchorNonEdgeRecorded) {
  std::mt19937 rng(37);
  auto inst = omv_build(random_matrix(4, 0.5, rng));
  auto [xl, xr] = inst.x_non_edge;
  EXPECT_FALSE(inst.base.graph.has_edge(xl, xr));
  auto d = oracle_distance(inst.base.graph, xl, xr);
  ASSERT_TRUE(d.has_value());
  EXPECT_GE(*d, 3);
}

TEST(OmvQuery, ZeroVectorKeepsAnchorOnly) {
  std::mt19937 rng(41);
  auto inst = omv_build(random_matrix(4, 0.5, rng));
  std::vector<int> zero(4, 0), ones(4, 1);
  EXPECT_EQ(omv_query(inst, zero, ones), OmvAnswer::dist_ge_5);
  EXPECT_EQ(inst.graph.degree(inst.s), 1);  // just the anchor edge
  auto d = oracle_distance(inst.graph, inst.s, inst.t);
  ASSERT_TRUE(d.has_value());
  EXPECT_GE(*d, 5);
}

TEST(OmvQuery, ClassificationMatchesBooleanProduct) {
  std::mt19937 rng(43);
  for (int k : {3, 5, 8}) {
    auto m = random_matrix(k, 0.3, rng);
    auto inst = omv_build(m);
    for (int q = 0; q < 30; ++q) {
      auto u = random_vector(k, rng), v = random_vector(k, rng);
      OmvAnswer got = omv_query(inst, u, v);
      OmvAnswer want = boolean_product(m, u, v) ? OmvAnswer::dist3 : OmvAnswer::dist_ge_5;
      EXPECT_EQ(got, want) << "k=" << k << " q=" << q;
    }
  }
}

TEST(OmvQuery, DiffsTouchOnlyChangedEdges) {
  std::mt19937 rng(47);
  auto inst = omv_build(random_matrix(5, 0.4, rng));
  auto u = random_vector(5, rng), v = random_vector(5, rng);
  omv_query(inst, u, v);
  std::size_t before = inst.log.size();
  omv_query(inst, u, v);  // identical query: no edge churn
  EXPECT_EQ(inst.log.size(), before);
}

TEST(OmvInstance, StaysConnectedAndConductancePositive) {
  std::mt19937 rng(53);
  auto m = random_matrix(4, 0.4, rng);
  auto inst = omv_build(m);
  for (int q = 0; q < 12; ++q) {
    omv_query(inst, random_vector(4, rng), random_vector(4, rng));
    EXPECT_TRUE(inst.graph.connected());
  }
}

TEST(OmvBuild, RejectsTinyMatrices) {
  EXPECT_THROW(omv_build({{1}}), InvalidInput);
  EXPECT_THROW(omv_build({{1, 0}, {1}}), InvalidInput);
}
