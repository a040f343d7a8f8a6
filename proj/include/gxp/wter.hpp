#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gxp/errors.hpp"
#include "gxp/expander.hpp"
#include "gxp/gadget.hpp"
#include "gxp/graph.hpp"
#include "gxp/oracles.hpp"
#include "gxp/rational.hpp"
#include "json.hpp"

namespace gxp {

// Exact rule recovering the answer on G from the answer on the reduced
// graph. `affine` composes both: sol(G) = (sol(out) - value) * scale.
struct SolutionMap {
  enum class Kind { additive_offset, multiplicative_factor, identity, affine };
  std::string problem;
  Kind kind = Kind::identity;
  Rat value{0};
  Rat scale{1};

  Rat invert(const Rat& solution_on_output) const {
    switch (kind) {
      case Kind::additive_offset: return solution_on_output - value;
      case Kind::multiplicative_factor: return solution_on_output / value;
      case Kind::identity: return solution_on_output;
      case Kind::affine: return (solution_on_output - value) * scale;
    }
    return solution_on_output;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["problem"] = problem;
    switch (kind) {
      case Kind::additive_offset: j["kind"] = "additive_offset"; break;
      case Kind::multiplicative_factor: j["kind"] = "multiplicative_factor"; break;
      case Kind::identity: j["kind"] = "identity"; break;
      case Kind::affine: j["kind"] = "affine"; break;
    }
    j["value"] = to_string(value);
    if (kind == Kind::affine) j["scale"] = to_string(scale);
    return j;
  }
};

struct WterResult {
  ExpanderizedGraph xg;
  SolutionMap map;
  nlohmann::json extra;  // reduction-specific parameters for reports
};

// ---------------------------------------------------------------------------
// Max-Cut. Layer sizes are rebalanced so the optimum offset is exactly 7dN:
// every v gets c_v edges to L and to R with sum(c_v) topped up to d*N, X is
// d_X-regular and the bicliques have f vertices per side, where
// 2f + d_X = 6d, f >= d + d_X and d_X >= d. The optimal cut then cuts both
// bicliques (2fN), all of X (d_X N) and exactly e(V,L) = dN mixed edges:
// 7dN on top of MC(G).
// ---------------------------------------------------------------------------
namespace detail {

struct MaxCutLayout {
  int d, d_x, f, n_side;
};

inline int maxcut_dx(int d) { return 2 * ((2 * d) / 3); }
inline int maxcut_f(int d) { return 3 * d - (2 * d) / 3; }

inline MaxCutLayout choose_maxcut_layout(int n, const std::vector<int>& base_quota,
                                         std::int64_t e0, const Rat& eps) {
  int max_quota = 0;
  for (int q : base_quota) max_quota = std::max(max_quota, q);
  MaxCutLayout best{};
  std::int64_t best_cost = -1;
  for (int d = 2; d <= std::min<std::int64_t>(n, 24); ++d) {
    if (d == 3 && n < 3) continue;
    int d_x = maxcut_dx(d), f = maxcut_f(d);
    std::int64_t n_side = std::max<std::int64_t>(
        {static_cast<std::int64_t>(ceil_mul(eps, n) + 1) / 2, std::int64_t(max_quota),
         ceil_div(e0, d), std::int64_t(d_x)});
    // Top-up capacity: need d*N <= n*N, i.e. d <= n.
    if (d > n) break;
    std::int64_t cost = n + 2 * n_side + 2 * f;
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best = {d, d_x, f, static_cast<int>(n_side)};
    }
  }
  if (best_cost < 0) throw AllocationInfeasible("no feasible Max-Cut layout");
  return best;
}

}  // namespace detail

inline WterResult wter_max_cut(const Graph& g, const Rat& eps) {
  if (eps <= Rat(0) || eps > Rat(1)) throw InvalidInput("need 0 < eps <= 1");
  int n = g.vertex_count();
  if (n < 2) throw InvalidInput("need at least 2 vertices");
  Rat eps2 = eps * eps;
  std::vector<int> quota(n);
  std::int64_t e0 = 0;
  for (int v = 0; v < n; ++v) {
    quota[v] = allocation_quota(eps2, g.degree(v));
    e0 += quota[v];
  }
  auto layout = detail::choose_maxcut_layout(n, quota, e0, eps);
  int n_side = layout.n_side;
  // Top e(V,L) up to exactly d*N, one extra slot per vertex per pass.
  std::int64_t deficit = std::int64_t(layout.d) * n_side - e0;
  if (deficit < 0) throw AllocationInfeasible("layout degree below the allocation average");
  while (deficit > 0) {
    bool progress = false;
    for (int v = 0; v < n && deficit > 0; ++v)
      if (quota[v] < n_side) {
        ++quota[v];
        --deficit;
        progress = true;
      }
    if (!progress) throw AllocationInfeasible("cannot top allocation up to d*N");
  }

  auto slots = round_robin_slots(quota, n_side);

  WterResult r;
  ExpanderizedGraph& xg = r.xg;
  xg.n_original = n;
  xg.n_side = n_side;
  // The effective allocation fraction is eps^2 (each side separately).
  xg.eps = eps2;
  xg.delta = eps;
  xg.l_base = n;
  xg.r_base = n + n_side;
  int f_l_base = n + 2 * n_side;
  int f_r_base = f_l_base + layout.f;

  BipartiteExpander x = layout.d_x >= 3
                            ? [&] {
                                try {
                                  return build_bipartite_expander(n_side, layout.d_x);
                                } catch (const CertificationFailed&) {
                                  return build_best_effort_expander(n_side, layout.d_x);
                                }
                              }()
                            : build_best_effort_expander(n_side, layout.d_x);
  xg.expander_degree = layout.d_x;
  xg.cert = x.certificate;
  xg.cert_phi = x.certificate.value;

  xg.graph = g;
  xg.graph.add_vertices(2 * n_side + 2 * layout.f);
  xg.labels.assign(xg.graph.vertex_count(), Role::V);
  for (int i = 0; i < n_side; ++i) {
    xg.labels[xg.l_base + i] = Role::L;
    xg.labels[xg.r_base + i] = Role::R;
  }
  for (int i = 0; i < layout.f; ++i) {
    xg.labels[f_l_base + i] = Role::Aux;
    xg.labels[f_r_base + i] = Role::Aux;
  }
  xg.l_neighbors.assign(n, {});
  xg.r_neighbors.assign(n, {});
  xg.basis_degree.resize(n);
  for (int v = 0; v < n; ++v) {
    xg.basis_degree[v] = g.degree(v);
    xg.l_neighbors[v] = slots[v];
    xg.r_neighbors[v] = slots[v];  // mirrored allocation
    for (int slot : slots[v]) {
      xg.graph.insert_edge(v, xg.l_base + slot);
      xg.graph.insert_edge(v, xg.r_base + slot);
    }
  }
  for (int i = 0; i < layout.d_x; ++i)
    for (int xl = 0; xl < n_side; ++xl)
      xg.graph.insert_edge(xg.l_base + xl, xg.r_base + x.matchings[i][xl]);
  for (int i = 0; i < layout.f; ++i)
    for (int xl = 0; xl < n_side; ++xl) {
      xg.graph.insert_edge(f_l_base + i, xg.l_base + xl);
      xg.graph.insert_edge(f_r_base + i, xg.r_base + xl);
    }
  xg.expander = std::move(x);

  std::vector<int> both;
  for (int i = 0; i < n_side; ++i) {
    both.push_back(xg.l_base + i);
    both.push_back(xg.r_base + i);
  }
  xg.alpha = detail::measured_alpha(xg.graph, both, layout.d_x);
  xg.conductance_claim = xg.cert_phi * eps2 / 20;
  xg.blowup_vertices = 2 * n_side + 2 * layout.f;
  xg.blowup_edges = xg.graph.edge_count() - g.edge_count();

  r.map.problem = "max-cut";
  r.map.kind = SolutionMap::Kind::additive_offset;
  r.map.value = Rat(7 * std::int64_t(layout.d) * n_side);
  r.extra["d"] = layout.d;
  r.extra["eps_input"] = to_string(eps);
  r.extra["d_X"] = layout.d_x;
  r.extra["biclique_size"] = layout.f;
  r.extra["N"] = n_side;
  return r;
}

// ---------------------------------------------------------------------------
// Densest Subgraph: tradeoff gadget whose added vertices all have degree
// below the output's average density, so no maximizer touches them.
// ---------------------------------------------------------------------------
inline const Rat kDensestEpsStatic = Rat(1, 17);
inline const Rat kDensestEpsDynamic = Rat(1, 44);

namespace detail {

inline void check_densest_exclusion(const Graph& gexp, const std::vector<Role>& labels,
                                    std::int64_t n_exp, std::int64_t m_exp) {
  int mu = 0;
  for (int v = 0; v < static_cast<int>(labels.size()); ++v)
    if (labels[v] == Role::L || labels[v] == Role::R) mu = std::max(mu, gexp.degree(v));
  // mu < m_exp / n_exp, exactly.
  if (!(Rat(mu) < Rat(m_exp, n_exp)))
    throw Error("DensestExclusionViolated",
                "max gadget degree " + std::to_string(mu) + " not below density " +
                    std::to_string(m_exp) + "/" + std::to_string(n_exp));
}

}  // namespace detail

inline WterResult wter_densest(const Graph& g) {
  std::int64_t n = g.vertex_count(), m = g.edge_count();
  if (m <= 42 * n) throw DensityTooLow("need m > 42n, have m = " + std::to_string(m) +
                                       ", n = " + std::to_string(n));
  WterResult r;
  r.xg = build_tradeoff_gadget(g, kDensestEpsStatic, Rat(1));
  detail::check_densest_exclusion(r.xg.graph, r.xg.labels, r.xg.graph.vertex_count(),
                                  r.xg.graph.edge_count());
  r.map.problem = "densest-subgraph";
  r.map.kind = SolutionMap::Kind::identity;
  r.extra["eps"] = to_string(kDensestEpsStatic);
  return r;
}

// ---------------------------------------------------------------------------
// Density booster: attach a (2C+1)-clique to every vertex. Exact inverse:
// rho(G) = (rho(G_C) - C) * (2C+1), valid when rho(G) < C + 1/2.
// ---------------------------------------------------------------------------
inline std::pair<Graph, SolutionMap> wter_densify_clique_attach(const Graph& g, int c) {
  if (c < 1) throw InvalidInput("C must be at least 1");
  int n = g.vertex_count();
  if (n == 0) throw InvalidInput("empty graph");
  if (n <= kOracleBudgets.densest_flow_vertices) {
    Rat rho = oracle_densest(g).density;
    if (!(rho < Rat(c) + Rat(1, 2)))
      throw DensityTooHigh("rho(G) = " + to_string(rho) + " not below C + 1/2");
  }
  Graph out = g;
  for (int v = 0; v < n; ++v) {
    int base = out.add_vertices(2 * c);
    std::vector<int> clique{v};
    for (int i = 0; i < 2 * c; ++i) clique.push_back(base + i);
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        out.insert_edge(clique[i], clique[j]);
  }
  SolutionMap map;
  map.problem = "densest-subgraph";
  map.kind = SolutionMap::Kind::affine;
  map.value = Rat(c);
  map.scale = Rat(2 * c + 1);
  return {std::move(out), map};
}

// ---------------------------------------------------------------------------
// Maximum Matching / Minimum Vertex Cover: plain gadget plus one pendant on
// every layer vertex; both optima shift by exactly 2N.
// ---------------------------------------------------------------------------
inline WterResult wter_matching(const Graph& g) {
  WterResult r;
  r.xg = build_core_gadget(g, GadgetParams{});
  int n_side = r.xg.n_side;
  int pend_base = r.xg.graph.add_vertices(2 * n_side);
  r.xg.labels.resize(r.xg.graph.vertex_count(), Role::Aux);
  for (int i = 0; i < 2 * n_side; ++i)
    r.xg.graph.insert_edge(r.xg.l_base + i, pend_base + i);
  r.xg.blowup_vertices += 2 * n_side;
  r.xg.blowup_edges += 2 * n_side;
  // Pendants shift every layer degree by one; re-measure the spread.
  r.xg.alpha = detail::measured_alpha(r.xg.graph, r.xg.vertices_with_role(Role::L),
                                      r.xg.expander_degree);
  // Pendants at most double any cut volume while boundaries never shrink.
  r.xg.conductance_claim = r.xg.conductance_claim / 2;
  r.map.problem = "maximum-matching";
  r.map.kind = SolutionMap::Kind::additive_offset;
  r.map.value = Rat(2 * n_side);
  // The vertex-cover optimum shifts by the same 2N; the companion value is
  // oracle-verified in the test suite.
  r.extra["vertex_cover_offset"] = 2 * n_side;
  return r;
}

inline WterResult wter_bipartite_perfect_matching(const Graph& g,
                                                  const std::vector<int>& parts_in = {}) {
  std::vector<int> parts = parts_in;
  if (parts.empty()) {
    parts = g.bipartition();
    if (parts.empty()) throw NotBipartite("input has an odd cycle");
  }
  int a = static_cast<int>(std::count(parts.begin(), parts.end(), 0));
  if (2 * a != g.vertex_count())
    throw UnequalParts("sides have " + std::to_string(a) + " and " +
                       std::to_string(g.vertex_count() - a) + " vertices");
  WterResult r;
  r.xg = build_bipartite_core_gadget(g, parts);
  int n_side = r.xg.n_side;
  int pend_base = r.xg.graph.add_vertices(2 * n_side);
  r.xg.labels.resize(r.xg.graph.vertex_count(), Role::Aux);
  for (int i = 0; i < 2 * n_side; ++i)
    r.xg.graph.insert_edge(r.xg.l_base + i, pend_base + i);
  r.xg.blowup_vertices += 2 * n_side;
  r.xg.blowup_edges += 2 * n_side;
  {
    std::vector<int> both;
    for (int i = 0; i < 2 * n_side; ++i) both.push_back(r.xg.l_base + i);
    r.xg.alpha = detail::measured_alpha(r.xg.graph, both, r.xg.expander_degree);
  }
  r.xg.conductance_claim = r.xg.conductance_claim / 2;
  r.map.problem = "bipartite-perfect-matching";
  r.map.kind = SolutionMap::Kind::identity;
  return r;
}

// ---------------------------------------------------------------------------
// k-Clique: an independent copy V_ind wired to the original neighborhoods,
// gadget applied to the copy only. Counts scale by exactly k+1.
// ---------------------------------------------------------------------------
inline WterResult wter_k_clique(const Graph& g, int k) {
  if (k < 3) throw InvalidInput("k must be at least 3");
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) throw IsolatedVertex("vertex " + std::to_string(v) + " is isolated");

  WterResult r;
  ExpanderizedGraph& xg = r.xg;
  int n_side = n + 2;
  xg.n_original = 2 * n;
  xg.n_side = n_side;
  xg.l_base = 2 * n;
  xg.r_base = 2 * n + n_side;

  xg.graph = g;
  xg.graph.add_vertices(n);  // V_ind: ids n .. 2n-1
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) xg.graph.insert_edge(w, n + v);  // w adjacent to v_ind

  std::vector<int> quota(2 * n, 0);
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) {
    quota[n + v] = g.degree(v) + 3;
    total += quota[n + v];
  }
  auto slots = round_robin_slots(quota, n_side);

  BipartiteExpander x = build_certified_expander_at_least(
      n_side, detail::clamped_expander_degree(total, n_side));
  xg.expander_degree = x.degree;
  xg.cert = x.certificate;
  xg.cert_phi = x.certificate.value;

  xg.graph.add_vertices(2 * n_side);
  xg.labels.assign(xg.graph.vertex_count(), Role::V);
  for (int v = 0; v < n; ++v) xg.labels[n + v] = Role::Aux;  // the independent copy
  for (int i = 0; i < n_side; ++i) {
    xg.labels[xg.l_base + i] = Role::L;
    xg.labels[xg.r_base + i] = Role::R;
  }
  xg.l_neighbors.assign(2 * n, {});
  xg.basis_degree.assign(2 * n, 0);
  for (int v = 0; v < n; ++v) {
    xg.basis_degree[n + v] = g.degree(v);
    xg.l_neighbors[n + v] = slots[n + v];
    for (int slot : slots[n + v]) xg.graph.insert_edge(n + v, xg.l_base + slot);
  }
  for (int i = 0; i < xg.expander_degree; ++i)
    for (int xl = 0; xl < n_side; ++xl)
      xg.graph.insert_edge(xg.l_base + xl, xg.r_base + x.matchings[i][xl]);
  xg.expander = std::move(x);

  auto layer = xg.vertices_with_role(Role::L);
  xg.alpha = detail::measured_alpha(xg.graph, layer, xg.expander_degree);
  xg.conductance_claim = plain_conductance_claim(xg.cert_phi) / 5;
  xg.blowup_vertices = n + 2 * n_side;
  xg.blowup_edges = xg.graph.edge_count() - g.edge_count();

  r.map.problem = "k-clique-count";
  r.map.kind = SolutionMap::Kind::multiplicative_factor;
  r.map.value = Rat(k + 1);
  r.extra["k"] = k;
  r.extra["detection"] = "identity";
  return r;
}

// ---------------------------------------------------------------------------
// H-Subgraph detection: plain gadget with every V-to-L and L-to-R edge
// subdivided into a path of ceil(|V(H)|/2) edges, which keeps every copy of
// a pendant-free H inside the original G.
// ---------------------------------------------------------------------------
inline WterResult wter_h_subgraph(const Graph& g, const Graph& pattern) {
  int hp = pattern.vertex_count();
  if (hp < 2) throw UnsupportedPattern("pattern too small");
  for (int v = 0; v < hp; ++v)
    if (pattern.degree(v) <= 1)
      throw UnsupportedPattern("pattern vertex " + std::to_string(v) + " is a pendant");

  WterResult r;
  r.xg = build_core_gadget(g, GadgetParams{});
  ExpanderizedGraph& xg = r.xg;
  int path_len = (hp + 1) / 2;
  // Subdivide every V-to-L and L-to-R edge.
  std::vector<std::pair<int, int>> to_subdivide;
  for (auto [u, v] : xg.graph.edges()) {
    Role ru = xg.labels[u], rv = xg.labels[v];
    bool v_to_l = (ru == Role::V && rv == Role::L) || (ru == Role::L && rv == Role::V);
    bool l_to_r = (ru == Role::L && rv == Role::R) || (ru == Role::R && rv == Role::L);
    if (v_to_l || l_to_r) to_subdivide.emplace_back(u, v);
  }
  for (auto [u, v] : to_subdivide) {
    xg.graph.delete_edge(u, v);
    int prev = u;
    for (int i = 0; i < path_len - 1; ++i) {
      int mid = xg.graph.add_vertices(1);
      xg.labels.push_back(Role::Aux);
      xg.graph.insert_edge(prev, mid);
      prev = mid;
    }
    xg.graph.insert_edge(prev, v);
  }
  xg.blowup_vertices = xg.graph.vertex_count() - g.vertex_count();
  xg.blowup_edges = xg.graph.edge_count() - g.edge_count();
  // Subdivision stretches volumes by at most the path length.
  xg.conductance_claim = xg.conductance_claim / (2 * path_len);
  r.map.problem = "h-subgraph-detection";
  r.map.kind = SolutionMap::Kind::identity;
  r.extra["path_length"] = path_len;
  return r;
}

// ---------------------------------------------------------------------------
// Hitting set Q of size ceil(eps n): every non-member of degree above
// ln(1/eps)/eps must see an eps-fraction of its neighborhood inside Q.
// Deterministic greedy with an exhaustive fallback at desk scale.
// ---------------------------------------------------------------------------
namespace detail {

inline bool hitting_set_ok(const Graph& g, const std::vector<char>& in_q, const Rat& eps,
                           double threshold) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_q[v]) continue;
    if (static_cast<double>(g.degree(v)) <= threshold) continue;
    std::int64_t hits = 0;
    for (int w : g.neighbors(v)) hits += in_q[w];
    if (hits * eps.denominator() < eps.numerator() * g.degree(v)) return false;
  }
  return true;
}

}  // namespace detail

inline std::vector<int> build_hitting_set(const Graph& g, const Rat& eps) {
  if (eps <= Rat(0) || eps >= Rat(1)) throw InvalidInput("need 0 < eps < 1");
  int n = g.vertex_count();
  if (n == 0) throw InvalidInput("empty graph");
  int q_size = static_cast<int>(ceil_mul(eps, n));
  q_size = std::max(q_size, 1);
  double threshold = std::log(1.0 / to_double(eps)) / to_double(eps);

  std::vector<char> in_q(n, 0);
  for (int round = 0; round < q_size; ++round) {
    // Pick the vertex covering the most currently-deficient neighborhoods.
    std::vector<char> deficient(n, 0);
    for (int v = 0; v < n; ++v) {
      if (in_q[v] || static_cast<double>(g.degree(v)) <= threshold) continue;
      std::int64_t hits = 0;
      for (int w : g.neighbors(v)) hits += in_q[w];
      if (hits * eps.denominator() < eps.numerator() * g.degree(v)) deficient[v] = 1;
    }
    int pick = -1;
    std::int64_t best_score = -1;
    for (int u = 0; u < n; ++u) {
      if (in_q[u]) continue;
      std::int64_t score = 0;
      for (int w : g.neighbors(u)) score += deficient[w];
      if (score > best_score) {
        best_score = score;
        pick = u;
      }
    }
    in_q[pick] = 1;
  }

  if (!detail::hitting_set_ok(g, in_q, eps, threshold)) {
    if (n > 20) throw HittingSetFailed("greedy failed and n too large for exhaustive search");
    // Exhaustive: first subset of the right size that qualifies, in
    // lexicographic order.
    std::vector<int> idx(q_size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::fill(in_q.begin(), in_q.end(), 0);
      for (int i : idx) in_q[i] = 1;
      if (detail::hitting_set_ok(g, in_q, eps, threshold)) break;
      // next combination
      int i = q_size - 1;
      while (i >= 0 && idx[i] == n - q_size + i) --i;
      if (i < 0) throw HittingSetFailed("no qualifying subset of size " + std::to_string(q_size));
      ++idx[i];
      for (int j = i + 1; j < q_size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::vector<int> q;
  for (int v = 0; v < n; ++v)
    if (in_q[v]) q.push_back(v);
  return q;
}

// f(eps) = eps^2 / (10 ln(1/eps)), the hitting-set cut quality constant.
inline double hitting_set_quality(const Rat& eps) {
  double e = to_double(eps);
  return e * e / (10.0 * std::log(1.0 / e));
}

// ---------------------------------------------------------------------------
// Max-Clique / Minimum Dominating Set: independent copies of a hitting set
// Q wired to the original neighborhoods, tradeoff gadget on the copies.
// ---------------------------------------------------------------------------
namespace detail {

inline WterResult build_hitting_core(const Graph& g, const Rat& eps) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) throw IsolatedVertex("vertex " + std::to_string(v) + " is isolated");
  std::vector<int> q = build_hitting_set(g, eps);
  int qn = static_cast<int>(q.size());
  int n_side = static_cast<int>(ceil_mul(eps, n)) + 2;
  // The layer must fit the largest quota.
  for (int u : q) n_side = std::max(n_side, allocation_quota(eps, g.degree(u)));

  WterResult r;
  ExpanderizedGraph& xg = r.xg;
  xg.n_original = n + qn;
  xg.n_side = n_side;
  xg.eps = eps;
  xg.l_base = n + qn;
  xg.r_base = n + qn + n_side;

  xg.graph = g;
  xg.graph.add_vertices(qn);  // Q_ind: ids n .. n+qn-1
  for (int qi = 0; qi < qn; ++qi)
    for (int w : g.neighbors(q[qi])) xg.graph.insert_edge(w, n + qi);

  std::vector<int> quota(n + qn, 0);
  std::int64_t total = 0;
  for (int qi = 0; qi < qn; ++qi) {
    quota[n + qi] = allocation_quota(eps, g.degree(q[qi]));
    total += quota[n + qi];
  }
  auto slots = round_robin_slots(quota, n_side);

  BipartiteExpander x = build_certified_expander_at_least(
      n_side, detail::clamped_expander_degree(total, n_side));
  xg.expander_degree = x.degree;
  xg.cert = x.certificate;
  xg.cert_phi = x.certificate.value;

  xg.graph.add_vertices(2 * n_side);
  xg.labels.assign(xg.graph.vertex_count(), Role::V);
  for (int qi = 0; qi < qn; ++qi) xg.labels[n + qi] = Role::Aux;
  for (int i = 0; i < n_side; ++i) {
    xg.labels[xg.l_base + i] = Role::L;
    xg.labels[xg.r_base + i] = Role::R;
  }
  xg.l_neighbors.assign(n + qn, {});
  xg.basis_degree.assign(n + qn, 0);
  for (int qi = 0; qi < qn; ++qi) {
    xg.basis_degree[n + qi] = g.degree(q[qi]);
    xg.l_neighbors[n + qi] = slots[n + qi];
    for (int slot : slots[n + qi]) xg.graph.insert_edge(n + qi, xg.l_base + slot);
  }
  for (int i = 0; i < xg.expander_degree; ++i)
    for (int xl = 0; xl < n_side; ++xl)
      xg.graph.insert_edge(xg.l_base + xl, xg.r_base + x.matchings[i][xl]);
  xg.expander = std::move(x);

  auto layer = xg.vertices_with_role(Role::L);
  xg.alpha = detail::measured_alpha(xg.graph, layer, xg.expander_degree);
  Rat f_eps = rat_floor(hitting_set_quality(eps));
  xg.conductance_claim =
      robust_conductance_claim(xg.cert_phi, eps, xg.alpha) * f_eps / 4;
  xg.blowup_vertices = qn + 2 * n_side;
  xg.blowup_edges = xg.graph.edge_count() - g.edge_count();
  r.extra["hitting_set"] = q;
  r.extra["f_eps"] = hitting_set_quality(eps);
  return r;
}

}  // namespace detail

inline WterResult wter_max_clique(const Graph& g, const Rat& eps) {
  WterResult r = detail::build_hitting_core(g, eps);
  r.map.problem = "max-clique";
  r.map.kind = SolutionMap::Kind::identity;
  return r;
}

inline WterResult wter_dominating_set(const Graph& g, const Rat& eps) {
  WterResult r = detail::build_hitting_core(g, eps);
  int n_side = r.xg.n_side;
  int pend_base = r.xg.graph.add_vertices(n_side);
  r.xg.labels.resize(r.xg.graph.vertex_count(), Role::Aux);
  for (int i = 0; i < n_side; ++i)
    r.xg.graph.insert_edge(r.xg.l_base + i, pend_base + i);
  r.xg.blowup_vertices += n_side;
  r.xg.blowup_edges += n_side;
  r.xg.alpha = detail::measured_alpha(r.xg.graph, r.xg.vertices_with_role(Role::L),
                                      r.xg.expander_degree);
  r.xg.conductance_claim = r.xg.conductance_claim / 2;
  r.map.problem = "minimum-dominating-set";
  r.map.kind = SolutionMap::Kind::additive_offset;
  r.map.value = Rat(n_side);
  return r;
}

}  // namespace gxp
