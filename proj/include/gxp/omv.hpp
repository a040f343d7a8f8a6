#pragma once

#include <string>
#include <vector>

#include "gxp/errors.hpp"
#include "gxp/gadget.hpp"
#include "gxp/graph.hpp"
#include "gxp/oracles.hpp"

namespace gxp {

struct EdgeUpdateRecord {
  bool insert;
  int u, v;
};

// Online matrix-vector instance as a dynamic distance problem. The matrix is
// a bipartite graph (rows A, columns B) run through the bipartiteness-
// preserving gadget; s and t attach permanently to a padded all-zero row and
// column, so the whole graph stays bipartite with s and t on opposite sides.
// Every query toggles s-to-row and t-to-column edges; then
// dist(s,t) = 3 iff u^T M v = 1 and dist(s,t) >= 5 otherwise (odd by parity).
struct OmvInstance {
  std::vector<std::vector<int>> matrix;
  int k = 0;
  ExpanderizedGraph base;     // gadgeted G_M (without s, t)
  Graph graph;                // live graph: base + s + t + query edges
  int s = -1, t = -1;
  int pad_row = -1, pad_col = -1;  // the always-on attachment points
  std::pair<int, int> x_non_edge{-1, -1};  // recorded non-edge of X (graph ids)
  std::vector<int> u_cur, v_cur;
  std::vector<EdgeUpdateRecord> log;
  Rat conductance_claim{0};

  int row_vertex(int i) const { return i; }          // a_i
  int col_vertex(int j) const { return k + 1 + j; }  // b_j
};

enum class OmvAnswer { dist3, dist_ge_5 };

inline OmvInstance omv_build(const std::vector<std::vector<int>>& matrix) {
  int k = static_cast<int>(matrix.size());
  if (k < 2) throw InvalidInput("matrix must be at least 2x2");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != k) throw InvalidInput("matrix must be square");

  OmvInstance inst;
  inst.matrix = matrix;
  inst.k = k;
  // Rows 0..k-1, padded zero row k, columns k+1..2k, padded zero column 2k+1.
  int n_bip = 2 * k + 2;
  Graph g_m(n_bip);
  std::vector<int> parts(n_bip, 0);
  for (int j = 0; j <= k; ++j) parts[k + 1 + j] = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (matrix[i][j]) g_m.insert_edge(i, k + 1 + j);

  inst.base = build_bipartite_core_gadget(g_m, parts);
  inst.pad_row = k;
  inst.pad_col = 2 * k + 1;

  // Record the first non-edge of X (needed: X not complete bipartite).
  const BipartiteExpander& x = inst.base.expander;
  inst.x_non_edge = {-1, -1};
  for (int xl = 0; xl < x.side_size && inst.x_non_edge.first < 0; ++xl) {
    std::vector<char> hit(x.side_size, 0);
    for (int i = 0; i < x.degree; ++i) hit[x.matchings[i][xl]] = 1;
    for (int xr = 0; xr < x.side_size; ++xr)
      if (!hit[xr]) {
        inst.x_non_edge = {inst.base.l_base + xl, inst.base.r_base + xr};
        break;
      }
  }
  if (inst.x_non_edge.first < 0)
    throw AnchorUnavailable("expander is complete bipartite; no non-edge exists");
  // The non-edge endpoints sit on opposite sides with disjoint
  // neighborhoods, so their distance is at least 3.
  auto d = oracle_distance(inst.base.graph, inst.x_non_edge.first, inst.x_non_edge.second);
  if (d && *d < 3) throw Error("AnchorInvariantViolated", "non-edge endpoints at distance < 3");

  inst.graph = inst.base.graph;
  inst.s = inst.graph.add_vertices(1);
  inst.t = inst.graph.add_vertices(1);
  inst.graph.insert_edge(inst.s, inst.pad_row);
  inst.graph.insert_edge(inst.t, inst.pad_col);
  inst.u_cur.assign(k, 0);
  inst.v_cur.assign(k, 0);
  // Two pendant-ish attachments cost a factor 4 each on top of the
  // bipartite gadget's claim.
  inst.conductance_claim = inst.base.conductance_claim / 16;
  return inst;
}

// Applies the (u, v) query via edge diffs and classifies the s-t distance.
// The graph is bipartite with s and t on opposite sides, so the distance is
// odd: 3 exactly when the boolean product is 1, otherwise at least 5.
inline OmvAnswer omv_query(OmvInstance& inst, const std::vector<int>& u,
                           const std::vector<int>& v) {
  if (static_cast<int>(u.size()) != inst.k || static_cast<int>(v.size()) != inst.k)
    throw InvalidInput("query vectors must have length k");
  for (int i = 0; i < inst.k; ++i) {
    bool want = u[i] != 0, have = inst.graph.has_edge(inst.s, inst.row_vertex(i));
    if (want == have) continue;
    if (want)
      inst.graph.insert_edge(inst.s, inst.row_vertex(i));
    else
      inst.graph.delete_edge(inst.s, inst.row_vertex(i));
    inst.log.push_back({want, inst.s, inst.row_vertex(i)});
  }
  for (int j = 0; j < inst.k; ++j) {
    bool want = v[j] != 0, have = inst.graph.has_edge(inst.t, inst.col_vertex(j));
    if (want == have) continue;
    if (want)
      inst.graph.insert_edge(inst.t, inst.col_vertex(j));
    else
      inst.graph.delete_edge(inst.t, inst.col_vertex(j));
    inst.log.push_back({want, inst.t, inst.col_vertex(j)});
  }
  inst.u_cur = u;
  inst.v_cur = v;
  auto d = oracle_distance(inst.graph, inst.s, inst.t);
  if (d && *d == 3) return OmvAnswer::dist3;
  if (d && *d < 5)
    throw Error("OmvClassificationBroken",
                "distance " + std::to_string(*d) + " contradicts the 3-vs-5 gap");
  return OmvAnswer::dist_ge_5;
}

inline bool boolean_product(const std::vector<std::vector<int>>& m, const std::vector<int>& u,
                            const std::vector<int>& v) {
  int k = static_cast<int>(m.size());
  for (int i = 0; i < k; ++i) {
    if (!u[i]) continue;
    for (int j = 0; j < k; ++j)
      if (m[i][j] && v[j]) return true;
  }
  return false;
}

}  // namespace gxp
