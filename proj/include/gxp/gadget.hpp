#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gxp/certificate.hpp"
#include "gxp/errors.hpp"
#include "gxp/expander.hpp"
#include "gxp/graph.hpp"
#include "gxp/rational.hpp"

namespace gxp {

enum class Role : std::uint8_t { V, L, R, Aux };

struct GadgetParams {
  enum class Mode { plain, tradeoff, bipartite };
  Mode mode = Mode::plain;
  Rat eps{1};
  Rat delta{1};
};

// The augmented graph together with everything needed to audit it: the
// V/L/R/aux labels, the expander certificate, the measured degree spread
// alpha, and the conductance lower bound the construction is entitled to.
struct ExpanderizedGraph {
  Graph graph;
  std::vector<Role> labels;
  int n_original = 0;
  int n_side = 0;          // N
  int expander_degree = 0; // d_X
  Certificate cert;
  Rat cert_phi{0};         // certified phi_X (rational lower bound)
  Rat alpha{1};            // measured max allocation-layer degree / d_X
  Rat eps{1};
  Rat delta{1};
  Rat conductance_claim{0};
  int l_base = 0, r_base = 0;
  BipartiteExpander expander;                 // the X actually installed
  std::vector<std::vector<int>> l_neighbors;  // per original vertex
  std::vector<std::vector<int>> r_neighbors;  // bipartite / max-cut variants
  std::vector<int> basis_degree;              // degree each quota was computed from
  std::int64_t blowup_vertices = 0;
  std::int64_t blowup_edges = 0;

  std::vector<int> vertices_with_role(Role r) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(labels.size()); ++v)
      if (labels[v] == r) out.push_back(v);
    return out;
  }
};

// One circular pass over N slots handing each vertex `quota[v]` consecutive
// slots. Distinctness requires quota <= N; Round-Robin keeps slot loads
// within one of each other.
inline std::vector<std::vector<int>> round_robin_slots(const std::vector<int>& quota, int n_side) {
  for (std::size_t v = 0; v < quota.size(); ++v)
    if (quota[v] > n_side)
      throw AllocationInfeasible("vertex " + std::to_string(v) + " needs " +
                                 std::to_string(quota[v]) + " distinct slots, N = " +
                                 std::to_string(n_side));
  std::vector<std::vector<int>> out(quota.size());
  int ptr = 0;
  for (std::size_t v = 0; v < quota.size(); ++v) {
    out[v].reserve(quota[v]);
    for (int i = 0; i < quota[v]; ++i) {
      out[v].push_back(ptr);
      ptr = (ptr + 1) % n_side;
    }
  }
  return out;
}

// ceil(eps * deg) + 3, the per-vertex allocation quota.
inline int allocation_quota(const Rat& eps, int deg) {
  return static_cast<int>(ceil_mul(eps, deg)) + 3;
}

// Slot lists for every vertex of g against a layer of
// n_side slots, namely quota ceil(eps*deg)+3 each, in one circular pass.
inline std::vector<std::vector<int>> round_robin_allocate(const Graph& g, int n_side,
                                                          const Rat& eps) {
  std::vector<int> quota(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) quota[v] = allocation_quota(eps, g.degree(v));
  return round_robin_slots(quota, n_side);
}

namespace detail {

inline int clamped_expander_degree(std::int64_t total_alloc_edges, int n_side) {
  // The explicit construction needs d >= 3; d is also capped at N.
  std::int64_t d = ceil_div(total_alloc_edges, n_side);
  d = std::max<std::int64_t>(d, 3);
  d = std::min<std::int64_t>(d, n_side);
  return static_cast<int>(d);
}

inline Rat measured_alpha(const Graph& gexp, const std::vector<int>& layer, int d_x) {
  int max_deg = d_x;
  for (int x : layer) max_deg = std::max(max_deg, gexp.degree(x));
  return Rat(max_deg, d_x);
}

}  // namespace detail

// Plain-mode bound from the two cut cases: min(phi_X/10, 1/5).
inline Rat plain_conductance_claim(const Rat& cert_phi) {
  return std::min(cert_phi / 10, Rat(1, 5));
}

// Robust claim: phi_X * eps / (5 alpha).
inline Rat robust_conductance_claim(const Rat& cert_phi, const Rat& eps, const Rat& alpha) {
  return cert_phi * eps / (5 * alpha);
}

inline ExpanderizedGraph build_tradeoff_gadget(const Graph& g, const Rat& eps, const Rat& delta) {
  if (eps <= Rat(0) || eps > Rat(1) || delta < eps || delta > Rat(1))
    throw InvalidInput("need 0 < eps <= delta <= 1");
  int n = g.vertex_count();
  bool plain = (eps == Rat(1) && delta == Rat(1));
  int n_side = plain ? std::max(n + 2, 4)
                     : std::max<int>(static_cast<int>(ceil_mul(delta, n)) + 2, 4);

  ExpanderizedGraph out;
  out.n_original = n;
  out.n_side = n_side;
  out.eps = eps;
  out.delta = delta;
  out.l_base = n;
  out.r_base = n + n_side;

  out.l_neighbors = round_robin_allocate(g, n_side, eps);
  out.basis_degree.resize(n);
  std::int64_t total_alloc = 0;
  for (int v = 0; v < n; ++v) {
    out.basis_degree[v] = g.degree(v);
    total_alloc += static_cast<std::int64_t>(out.l_neighbors[v].size());
  }

  // Formula degree, raised when the spectral certificate needs it.
  BipartiteExpander x = build_certified_expander_at_least(
      n_side, detail::clamped_expander_degree(total_alloc, n_side));
  out.expander_degree = x.degree;
  out.cert = x.certificate;
  out.cert_phi = x.certificate.value;

  out.graph = g;
  out.graph.add_vertices(2 * n_side);
  out.labels.assign(out.graph.vertex_count(), Role::V);
  for (int i = 0; i < n_side; ++i) {
    out.labels[out.l_base + i] = Role::L;
    out.labels[out.r_base + i] = Role::R;
  }
  for (int v = 0; v < n; ++v)
    for (int slot : out.l_neighbors[v]) out.graph.insert_edge(v, out.l_base + slot);
  for (int i = 0; i < out.expander_degree; ++i)
    for (int xl = 0; xl < n_side; ++xl)
      out.graph.insert_edge(out.l_base + xl, out.r_base + x.matchings[i][xl]);

  auto layer = out.vertices_with_role(Role::L);
  out.alpha = detail::measured_alpha(out.graph, layer, out.expander_degree);
  out.conductance_claim = plain ? plain_conductance_claim(out.cert_phi)
                                : robust_conductance_claim(out.cert_phi, eps, out.alpha);
  out.blowup_vertices = 2 * n_side;
  out.blowup_edges = out.graph.edge_count() - g.edge_count();
  out.expander = std::move(x);
  return out;
}

inline ExpanderizedGraph build_core_gadget(const Graph& g, const GadgetParams& params);

// Bipartiteness-preserving variant: A allocates into L, B into R, X between
// L and R; the output is bipartite with sides A u R and B u L.
inline ExpanderizedGraph build_bipartite_core_gadget(const Graph& g,
                                                     const std::vector<int>& parts_in = {}) {
  int n = g.vertex_count();
  std::vector<int> parts = parts_in;
  if (parts.empty()) {
    parts = g.bipartition();
    if (parts.empty()) throw NotBipartite("input graph has an odd cycle");
  } else {
    if (static_cast<int>(parts.size()) != n) throw InvalidInput("parts size mismatch");
    for (auto [u, v] : g.edges())
      if (parts[u] == parts[v]) throw NotBipartite("edge inside a declared part");
  }

  int n_side = std::max(n + 2, 4);
  ExpanderizedGraph out;
  out.n_original = n;
  out.n_side = n_side;
  out.l_base = n;
  out.r_base = n + n_side;

  std::vector<int> quota_a(n, 0), quota_b(n, 0);
  out.basis_degree.resize(n);
  std::int64_t total_alloc = 0;
  for (int v = 0; v < n; ++v) {
    out.basis_degree[v] = g.degree(v);
    int q = g.degree(v) + 3;
    (parts[v] == 0 ? quota_a : quota_b)[v] = q;
    total_alloc += q;
  }
  auto slots_a = round_robin_slots(quota_a, n_side);
  auto slots_b = round_robin_slots(quota_b, n_side);

  BipartiteExpander x = build_certified_expander_at_least(
      n_side, detail::clamped_expander_degree(total_alloc, n_side));
  out.expander_degree = x.degree;
  out.cert = x.certificate;
  out.cert_phi = x.certificate.value;

  out.graph = g;
  out.graph.add_vertices(2 * n_side);
  out.labels.assign(out.graph.vertex_count(), Role::V);
  for (int i = 0; i < n_side; ++i) {
    out.labels[out.l_base + i] = Role::L;
    out.labels[out.r_base + i] = Role::R;
  }
  out.l_neighbors.assign(n, {});
  out.r_neighbors.assign(n, {});
  for (int v = 0; v < n; ++v) {
    if (parts[v] == 0) {
      out.l_neighbors[v] = slots_a[v];
      for (int slot : slots_a[v]) out.graph.insert_edge(v, out.l_base + slot);
    } else {
      out.r_neighbors[v] = slots_b[v];
      for (int slot : slots_b[v]) out.graph.insert_edge(v, out.r_base + slot);
    }
  }
  for (int i = 0; i < out.expander_degree; ++i)
    for (int xl = 0; xl < n_side; ++xl)
      out.graph.insert_edge(out.l_base + xl, out.r_base + x.matchings[i][xl]);

  std::vector<int> both_layers;
  for (int i = 0; i < n_side; ++i) {
    both_layers.push_back(out.l_base + i);
    both_layers.push_back(out.r_base + i);
  }
  out.alpha = detail::measured_alpha(out.graph, both_layers, out.expander_degree);
  out.conductance_claim = plain_conductance_claim(out.cert_phi);
  out.blowup_vertices = 2 * n_side;
  out.blowup_edges = out.graph.edge_count() - g.edge_count();
  out.expander = std::move(x);
  return out;
}

inline ExpanderizedGraph build_core_gadget(const Graph& g, const GadgetParams& params) {
  switch (params.mode) {
    case GadgetParams::Mode::plain:
      if (params.eps != Rat(1) || params.delta != Rat(1))
        throw InvalidInput("plain mode forces eps = delta = 1");
      return build_tradeoff_gadget(g, Rat(1), Rat(1));
    case GadgetParams::Mode::tradeoff:
      return build_tradeoff_gadget(g, params.eps, params.delta);
    case GadgetParams::Mode::bipartite:
      return build_bipartite_core_gadget(g);
  }
  throw InvalidInput("unknown mode");
}

// The three conditions the conductance bound rests on, checkable on any build:
//   (1) every allocated vertex has at least eps*deg+1 layer neighbors,
//   (2) X carries a positive expansion certificate,
//   (3) allocation-layer degrees lie in [d_X, alpha d_X].
struct PreconditionCheck {
  bool ok = true;
  std::string detail;
};

inline PreconditionCheck check_robust_preconditions(const ExpanderizedGraph& xg) {
  PreconditionCheck r;
  auto fail = [&](const std::string& why) {
    r.ok = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += why;
  };
  for (int v = 0; v < xg.n_original; ++v) {
    std::int64_t have = 0;
    if (v < static_cast<int>(xg.l_neighbors.size())) have += xg.l_neighbors[v].size();
    if (v < static_cast<int>(xg.r_neighbors.size())) have += xg.r_neighbors[v].size();
    if (have == 0) continue;  // vertex not part of the gadgeted layer
    // have >= eps*basis + 1  <=>  have*den >= num*basis + den
    std::int64_t basis = xg.basis_degree.empty() ? 0 : xg.basis_degree[v];
    if (have * xg.eps.denominator() < xg.eps.numerator() * basis + xg.eps.denominator())
      fail("vertex " + std::to_string(v) + " has " + std::to_string(have) +
           " layer neighbors, needs > eps*deg");
  }
  if (!(xg.cert_phi > Rat(0))) fail("expander certificate not positive");
  std::int64_t dx = xg.expander_degree;
  for (int x = 0; x < static_cast<int>(xg.labels.size()); ++x) {
    if (xg.labels[x] != Role::L && xg.labels[x] != Role::R) continue;
    std::int64_t deg = xg.graph.degree(x);
    if (deg < dx) fail("layer vertex " + std::to_string(x) + " degree below d_X");
    if (deg * xg.alpha.denominator() > xg.alpha.numerator() * dx)
      fail("layer vertex " + std::to_string(x) + " degree above alpha*d_X");
  }
  return r;
}

// Induced subgraph on the V-labeled vertices, for the embedding property.
inline Graph induced_on_original(const ExpanderizedGraph& xg) {
  Graph g(xg.n_original);
  for (auto [u, v] : xg.graph.edges())
    if (u < xg.n_original && v < xg.n_original && xg.labels[u] == Role::V &&
        xg.labels[v] == Role::V)
      g.insert_edge(u, v);
  return g;
}

}  // namespace gxp
