#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gxp/errors.hpp"
#include "gxp/graph.hpp"

namespace gxp {

namespace detail {

constexpr int kDenseEigenMaxN = 2048;
// The biadjacency second-singular-value path switches to power iteration
// earlier: certification retries make the dense solve cost compound.
constexpr int kDenseSigmaMaxN = 512;

// Power iteration for the largest eigenvalue of a symmetric PSD operator,
// with optional deflation directions (assumed exact eigenvectors) and a
// tracked residual ||Av - lambda v||.
template <typename Apply>
std::pair<double, double> power_top_eigenvalue(int n, Apply&& apply,
                                               const std::vector<Eigen::VectorXd>& deflate,
                                               int max_iters = 4000, double tol = 1e-11) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = 1.0 + 0.37 * ((i * 2654435761u) % 1024) / 1024.0;
  auto project = [&](Eigen::VectorXd& x) {
    for (const auto& d : deflate) x -= d.dot(x) * d;
  };
  project(v);
  if (v.norm() < 1e-300) v.setRandom();
  v.normalize();
  double lambda = 0.0, residual = 1.0;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXd w = apply(v);
    project(w);
    lambda = v.dot(w);
    residual = (w - lambda * v).norm();
    double nw = w.norm();
    if (nw < 1e-300) return {0.0, 0.0};
    v = w / nw;
    if (residual < tol) break;
  }
  return {lambda, residual};
}

}  // namespace detail

// Certified lower bound on the conductance via the normalized Laplacian:
// lambda2/2 <= phi(G). The eigensolver residual is subtracted so the
// returned value is a sound (if slightly pessimistic) bound.
inline double spectral_conductance_lower_bound(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw InvalidInput("need at least 2 vertices");
  if (!g.connected()) return 0.0;

  std::vector<double> inv_sqrt_deg(n);
  for (int v = 0; v < n; ++v) inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));

  double lambda2, residual;
  if (n <= detail::kDenseEigenMaxN) {
    Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors(v)) lap(v, w) = -inv_sqrt_deg[v] * inv_sqrt_deg[w];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
    lambda2 = es.eigenvalues()[1];
    Eigen::VectorXd v2 = es.eigenvectors().col(1);
    residual = (lap * v2 - lambda2 * v2).norm();
  } else {
    // Work with 2I - L (PSD, top eigenvalue 2 at the known eigenvector
    // D^{1/2} 1), deflate it, and read lambda2 off the shifted spectrum.
    Eigen::VectorXd d0(n);
    for (int v = 0; v < n; ++v) d0[v] = std::sqrt(static_cast<double>(g.degree(v)));
    d0.normalize();
    auto apply = [&](const Eigen::VectorXd& x) {
      Eigen::VectorXd y = x;  // 2I - L = I + D^{-1/2} A D^{-1/2}
      for (int v = 0; v < n; ++v) {
        double acc = 0.0;
        for (int w : g.neighbors(v)) acc += inv_sqrt_deg[v] * inv_sqrt_deg[w] * x[w];
        y[v] += acc;
      }
      return y;
    };
    auto [top, res] = detail::power_top_eigenvalue(n, apply, {d0});
    lambda2 = 2.0 - top;
    residual = res;
  }
  return std::max(0.0, (lambda2 - residual) / 2.0);
}

// Second-largest singular value of the biadjacency matrix of a d-regular
// bipartite graph, residual folded in so the result is an upper bound.
// `left` lists the vertices of one side; everything else is the other side.
inline double second_singular_value_bipartite(const Graph& g, const std::vector<int>& left) {
  int n = g.vertex_count();
  int nl = static_cast<int>(left.size());
  int nr = n - nl;
  if (nl == 0 || nr == 0) throw InvalidInput("empty side");
  std::vector<int> lindex(n, -1), rindex(n, -1), right;
  for (int i = 0; i < nl; ++i) {
    if (left[i] < 0 || left[i] >= n || lindex[left[i]] != -1)
      throw InvalidInput("malformed left side");
    lindex[left[i]] = i;
  }
  for (int v = 0; v < n; ++v)
    if (lindex[v] == -1) {
      rindex[v] = static_cast<int>(right.size());
      right.push_back(v);
    }

  int d = g.degree(left[0]);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != d) throw InvalidInput("graph is not regular");
  for (int v : left)
    for (int w : g.neighbors(v))
      if (rindex[w] == -1) throw InvalidInput("edge inside the left side: not bipartite");
  if (nl != nr) throw InvalidInput("sides must have equal size for a regular bipartite graph");

  double lambda2, residual;
  if (nl <= detail::kDenseSigmaMaxN) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(nl, nr);
    for (int v : left)
      for (int w : g.neighbors(v)) b(lindex[v], rindex[w]) = 1.0;
    Eigen::MatrixXd m = b * b.transpose();  // eigenvalues are sigma_i^2
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    lambda2 = es.eigenvalues()[nl - 2];
    Eigen::VectorXd v2 = es.eigenvectors().col(nl - 2);
    residual = (m * v2 - lambda2 * v2).norm();
  } else {
    // sigma1 = d with left singular vector 1/sqrt(N); deflate and iterate.
    std::vector<std::vector<int>> adj_local(nl);
    for (int v : left) {
      auto& row = adj_local[lindex[v]];
      for (int w : g.neighbors(v)) row.push_back(rindex[w]);
    }
    Eigen::VectorXd ones = Eigen::VectorXd::Constant(nl, 1.0 / std::sqrt(double(nl)));
    auto apply = [&](const Eigen::VectorXd& x) {
      Eigen::VectorXd mid = Eigen::VectorXd::Zero(nr);
      for (int i = 0; i < nl; ++i)
        for (int j : adj_local[i]) mid[j] += x[i];
      Eigen::VectorXd y = Eigen::VectorXd::Zero(nl);
      for (int i = 0; i < nl; ++i)
        for (int j : adj_local[i]) y[i] += mid[j];
      return y;
    };
    auto [top, res] = detail::power_top_eigenvalue(nl, apply, {ones});
    lambda2 = top;
    residual = res;
  }
  return std::sqrt(std::max(0.0, lambda2 + residual)) + 1e-12;
}

}  // namespace gxp
