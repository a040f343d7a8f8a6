#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "gxp/cuts.hpp"
#include "gxp/errors.hpp"
#include "gxp/graph.hpp"
#include "gxp/rational.hpp"

namespace gxp {

// Hard input caps per oracle kind. Oracles refuse oversized inputs instead
// of silently approximating.
struct OracleBudgets {
  int max_cut_vertices = 30;
  int densest_flow_vertices = 4096;
  int densest_subset_vertices = 16;
  int matching_vertices = 512;
  int matching_exhaustive_vertices = 20;
  int clique_count_vertices = 512;
  int vertex_cover_branch_vertices = 40;  // after pendant kernelization
  int dominating_branch_vertices = 40;    // undominated after forcing rules
  int max_clique_vertices = 64;
  int subgraph_host_vertices = 2048;
  int subgraph_pattern_vertices = 8;
};

inline const OracleBudgets kOracleBudgets{};

namespace detail {

inline void require_budget(bool ok, const std::string& what) {
  if (!ok) throw BudgetExceeded(what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Max-Cut: exhaustive over 2^(n-1) cut pairs with Gray-code updates.
// ---------------------------------------------------------------------------
inline std::int64_t oracle_max_cut(const Graph& g) {
  int n = g.vertex_count();
  detail::require_budget(n <= kOracleBudgets.max_cut_vertices,
                         "max-cut oracle capped at " +
                             std::to_string(kOracleBudgets.max_cut_vertices) + " vertices");
  if (n < 2 || g.edge_count() == 0) return 0;
  std::int64_t best = 0;
  detail::enumerate_cut_pairs(g, [&](std::int64_t boundary, std::int64_t, int, std::uint32_t) {
    best = std::max(best, boundary);
  });
  return best;
}

// ---------------------------------------------------------------------------
// Dinic max-flow on integer capacities (used by the densest-subgraph oracle).
// ---------------------------------------------------------------------------
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

  void add_edge(int u, int v, std::int64_t cap, std::int64_t rev_cap = 0) {
    arcs_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], rev_cap});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
        flow += pushed;
    }
    return flow;
  }

  // Call after run(); vertices reachable from s in the residual network.
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = head_[u]; e != -1; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
          seen[arcs_[e].to] = 1;
          stack.push_back(arcs_[e].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to, next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
          level_[arcs_[e].to] = level_[u] + 1;
          q.push(arcs_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& e = iter_[u]; e != -1; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      std::int64_t pushed = dfs(a.to, t, std::min(limit, a.cap));
      if (pushed > 0) {
        a.cap -= pushed;
        arcs_[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_, level_, iter_;
  std::vector<Arc> arcs_;
};

// ---------------------------------------------------------------------------
// Densest subgraph, exact. One flow test decides "exists S with rho(S) > g"
// (all capacities scaled by the denominator of g, so the test is integral);
// iterating with g set to the density of the returned side converges to the
// exact maximum because every step strictly improves within the finite set
// {p/q : p <= m, q <= n}.
// ---------------------------------------------------------------------------
struct DensestResult {
  Rat density{0};
  std::vector<int> maximizer;
};

namespace detail {

// Returns a nonempty S with rho(S) > g, or empty when none exists.
inline std::vector<int> densest_improve(const Graph& g, const Rat& target) {
  int n = g.vertex_count();
  std::int64_t m = g.edge_count();
  std::int64_t p = target.numerator(), q = target.denominator();
  MaxFlow mf(n + 2);
  int s = n, t = n + 1;
  for (int v = 0; v < n; ++v) {
    mf.add_edge(s, v, m * q);
    mf.add_edge(v, t, m * q + 2 * p - q * g.degree(v));
  }
  for (auto [u, v] : g.edges()) mf.add_edge(u, v, q, q);
  std::int64_t flow = mf.run(s, t);
  if (flow >= m * q * n) return {};
  auto side = mf.source_side(s);
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (side[v]) out.push_back(v);
  return out;
}

inline Rat density_of(const Graph& g, const std::vector<int>& side) {
  if (side.empty()) return Rat(0);
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : side) in[v] = 1;
  std::int64_t internal = 0;
  for (int v : side)
    for (int w : g.neighbors(v))
      if (in[w] && w > v) ++internal;
  return Rat(internal, static_cast<std::int64_t>(side.size()));
}

}  // namespace detail

inline DensestResult oracle_densest(const Graph& g) {
  int n = g.vertex_count();
  detail::require_budget(n <= kOracleBudgets.densest_flow_vertices && n >= 1,
                         "densest oracle capped at " +
                             std::to_string(kOracleBudgets.densest_flow_vertices) + " vertices");
  if (g.edge_count() == 0) return {Rat(0), {0}};
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  DensestResult best{detail::density_of(g, all), all};
  while (true) {
    auto improved = detail::densest_improve(g, best.density);
    if (improved.empty()) break;
    Rat d = detail::density_of(g, improved);
    if (!(d > best.density)) break;  // flow says improvement exists; trust arithmetic
    best = {d, std::move(improved)};
  }
  return best;
}

// Independent reference: direct scan of all nonempty subsets.
inline DensestResult oracle_densest_subset_bruteforce(const Graph& g) {
  int n = g.vertex_count();
  detail::require_budget(n <= kOracleBudgets.densest_subset_vertices,
                         "subset densest capped at " +
                             std::to_string(kOracleBudgets.densest_subset_vertices) + " vertices");
  DensestResult best{Rat(0), {0}};
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t internal = 0;
    int size = 0;
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1)) continue;
      ++size;
      for (int w : g.neighbors(v))
        if (w > v && ((mask >> w) & 1)) ++internal;
    }
    Rat d(internal, size);
    if (d > best.density) {
      best.density = d;
      best.maximizer.clear();
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) best.maximizer.push_back(v);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Maximum matching in general graphs: augmenting paths with blossom
// contraction (O(V^3)).
// ---------------------------------------------------------------------------
inline int oracle_max_matching(const Graph& g) {
  int n = g.vertex_count();
  detail::require_budget(n <= kOracleBudgets.matching_vertices,
                         "matching oracle capped at " +
                             std::to_string(kOracleBudgets.matching_vertices) + " vertices");
  std::vector<int> match(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur_base = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };

  int result = 0;
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int u = find_path(v);
    if (u == -1) continue;
    ++result;
    while (u != -1) {
      int pv = parent[u], ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }
  return result;
}

// Independent reference: bitmask DP over vertex subsets.
inline int oracle_max_matching_exhaustive(const Graph& g) {
  int n = g.vertex_count();
  detail::require_budget(n <= kOracleBudgets.matching_exhaustive_vertices,
                         "exhaustive matching capped at " +
                             std::to_string(kOracleBudgets.matching_exhaustive_vertices) +
                             " vertices");
  std::vector<std::int8_t> dp(std::size_t(1) << n, -1);
  dp[0] = 0;
  auto rec = [&](auto&& self, std::uint32_t mask) -> int {
    if (dp[mask] >= 0) return dp[mask];
    int v = std::countr_zero(mask);
    int best = self(self, mask & (mask - 1));  // leave v unmatched
    for (int u : g.neighbors(v))
      if (u != v && ((mask >> u) & 1))
        best = std::max(best, 1 + self(self, mask & ~(1u << v) & ~(1u << u)));
    dp[mask] = static_cast<std::int8_t>(best);
    return best;
  };
  return rec(rec, (n == 32 ? ~0u : (1u << n) - 1));
}

// ---------------------------------------------------------------------------
// Bipartite perfect matching via Hopcroft-Karp.
// ---------------------------------------------------------------------------
inline int hopcroft_karp_matching(const Graph& g, const std::vector<int>& parts) {
  int n = g.vertex_count();
  std::vector<int> left;
  for (int v = 0; v < n; ++v) {
    if (parts[v] == 0) left.push_back(v);
    for (int w : g.neighbors(v))
      if (parts[v] == parts[w]) throw InvalidInput("edge inside one part");
  }
  const int kInf = std::numeric_limits<int>::max();
  std::vector<int> pair_u(n, -1), pair_v(n, -1), dist(n);
  auto bfs = [&]() {
    std::queue<int> q;
    for (int u : left) {
      if (pair_u[u] == -1) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        int next = pair_v[w];
        if (next == -1) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[u] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, int u) -> bool {
    for (int w : g.neighbors(u)) {
      int next = pair_v[w];
      if (next == -1 || (dist[next] == dist[u] + 1 && self(self, next))) {
        pair_u[u] = w;
        pair_v[w] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };
  int matching = 0;
  while (bfs())
    for (int u : left)
      if (pair_u[u] == -1 && dfs(dfs, u)) ++matching;
  return matching;
}

inline bool oracle_bipartite_pm(const Graph& g, const std::vector<int>& parts) {
  int n = g.vertex_count();
  if (static_cast<int>(parts.size()) != n) throw InvalidInput("parts size mismatch");
  int left = static_cast<int>(std::count(parts.begin(), parts.end(), 0));
  if (2 * left != n) return false;  // unequal sides cannot match perfectly
  return hopcroft_karp_matching(g, parts) == left;
}

// ---------------------------------------------------------------------------
// k-clique counting: ordered backtracking over increasing ids.
// ---------------------------------------------------------------------------
inline std::int64_t oracle_count_k_cliques(const Graph& g, int k) {
  int n = g.vertex_count();
  detail::require_budget(n <= kOracleBudgets.clique_count_vertices,
                         "clique counting capped at " +
                             std::to_string(kOracleBudgets.clique_count_vertices) + " vertices");
  if (k <= 0) throw InvalidInput("k must be positive");
  if (k == 1) return n;
  std::int64_t count = 0;
  std::vector<int> cand;
  auto rec = [&](auto&& self, const std::vector<int>& candidates, int depth) -> void {
    if (depth == k) {
      ++count;
      return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      int v = candidates[i];
      if (static_cast<int>(candidates.size() - i) < k - depth) break;
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
      self(self, next, depth + 1);
    }
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  rec(rec, all, 0);
  return count;
}

// ---------------------------------------------------------------------------
// Minimum vertex cover: pendant/isolated kernelization, then edge branching.
// ---------------------------------------------------------------------------
namespace detail {

inline int mvc_branch(std::vector<std::vector<int>>& adj, std::vector<char>& removed, int budget_hint) {
  // find any remaining edge, preferring a max-degree endpoint
  int pick_u = -1, pick_v = -1, best_deg = -1;
  int n = static_cast<int>(adj.size());
  for (int u = 0; u < n; ++u) {
    if (removed[u]) continue;
    int deg = 0, nb = -1;
    for (int w : adj[u])
      if (!removed[w]) {
        ++deg;
        nb = w;
      }
    if (deg > best_deg && nb != -1) {
      best_deg = deg;
      pick_u = u;
      pick_v = nb;
    }
  }
  if (pick_u == -1) return 0;
  if (budget_hint <= 0) return std::numeric_limits<int>::max() / 4;

  auto take = [&](int v) {
    removed[v] = 1;
    int r = 1 + mvc_branch(adj, removed, budget_hint - 1);
    removed[v] = 0;
    return r;
  };
  // Degree-1 rule: the neighbor of a pendant is always a sound choice.
  int deg_v = 0;
  for (int w : adj[pick_v])
    if (!removed[w]) ++deg_v;
  if (deg_v == 1) return take(pick_u);
  return std::min(take(pick_u), take(pick_v));
}

}  // namespace detail

inline int oracle_min_vertex_cover(const Graph& g) {
  int n = g.vertex_count();
  // Kernelize pendants: the host of a pendant joins the cover.
  std::vector<char> removed(n, 0);
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  int forced = 0;
  bool changed = true;
  auto live_degree = [&](int v) {
    int d = 0;
    for (int w : adj[v])
      if (!removed[w]) ++d;
    return d;
  };
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      int d = live_degree(v);
      if (d == 0) {
        removed[v] = 1;
        changed = true;
      } else if (d == 1) {
        int host = -1;
        for (int w : adj[v])
          if (!removed[w]) host = w;
        removed[host] = 1;
        removed[v] = 1;
        ++forced;
        changed = true;
      }
    }
  }
  int live = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) ++live;
  detail::require_budget(live <= kOracleBudgets.vertex_cover_branch_vertices,
                         "vertex cover branch capped at " +
                             std::to_string(kOracleBudgets.vertex_cover_branch_vertices) +
                             " live vertices, have " + std::to_string(live));
  return forced + detail::mvc_branch(adj, removed, live);
}

// ---------------------------------------------------------------------------
// Minimum dominating set: pendant forcing, then branch and bound.
// ---------------------------------------------------------------------------
inline int oracle_min_dominating_set(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> dominated(n, 0), in_set(n, 0);
  int chosen = 0;
  // Forced moves: an isolated vertex dominates itself; a pendant's host is
  // at least as good as the pendant.
  for (int v = 0; v < n; ++v) {
    if (dominated[v]) continue;
    if (g.degree(v) == 0) {
      in_set[v] = 1;
      dominated[v] = 1;
      ++chosen;
    } else if (g.degree(v) == 1) {
      int host = g.neighbors(v)[0];
      if (!in_set[host]) {
        in_set[host] = 1;
        ++chosen;
        dominated[host] = 1;
        for (int w : g.neighbors(host)) dominated[w] = 1;
      }
    }
  }
  std::vector<int> undominated;
  for (int v = 0; v < n; ++v)
    if (!dominated[v]) undominated.push_back(v);
  detail::require_budget(static_cast<int>(undominated.size()) <=
                             kOracleBudgets.dominating_branch_vertices,
                         "dominating set branch capped at " +
                             std::to_string(kOracleBudgets.dominating_branch_vertices) +
                             " undominated vertices, have " +
                             std::to_string(undominated.size()));

  int best = std::numeric_limits<int>::max() / 4;
  auto rec = [&](auto&& self, int extra) -> void {
    int v = -1, options = std::numeric_limits<int>::max();
    for (int u = 0; u < n; ++u) {
      if (dominated[u]) continue;
      int opts = 1 + g.degree(u);
      if (opts < options) {
        options = opts;
        v = u;
      }
    }
    if (v == -1) {
      best = std::min(best, extra);
      return;
    }
    if (extra + 1 >= best) return;  // any fix costs at least one more vertex
    std::vector<int> candidates{v};
    for (int w : g.neighbors(v)) candidates.push_back(w);
    for (int c : candidates) {
      std::vector<int> newly;
      if (!dominated[c]) newly.push_back(c);
      for (int w : g.neighbors(c))
        if (!dominated[w]) newly.push_back(w);
      for (int w : newly) dominated[w] = 1;
      self(self, extra + 1);
      for (int w : newly) dominated[w] = 0;
    }
  };
  rec(rec, 0);
  return chosen + best;
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with a greedy coloring bound.
// ---------------------------------------------------------------------------
inline int oracle_max_clique(const Graph& g) {
  int n = g.vertex_count();
  detail::require_budget(n <= kOracleBudgets.max_clique_vertices,
                         "max clique capped at " +
                             std::to_string(kOracleBudgets.max_clique_vertices) + " vertices");
  if (n == 0) return 0;
  int best = 0;
  auto expand = [&](auto&& self, std::vector<int>& cand, int size) -> void {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    // Greedy coloring; the number of color classes bounds the clique size
    // attainable inside cand.
    std::vector<int> color(cand.size(), 0);
    int classes = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      int c = 1;
      for (;;) {
        bool clash = false;
        for (std::size_t j = 0; j < i; ++j)
          if (color[j] == c && g.has_edge(cand[i], cand[j])) {
            clash = true;
            break;
          }
        if (!clash) break;
        ++c;
      }
      color[i] = c;
      classes = std::max(classes, c);
    }
    // Visit candidates in decreasing color order.
    std::vector<std::size_t> order(cand.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return color[a] > color[b]; });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      std::size_t i = order[oi];
      if (size + color[i] <= best) return;
      int v = cand[i];
      std::vector<int> next;
      for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
        int u = cand[order[oj]];
        if (g.has_edge(v, u)) next.push_back(u);
      }
      self(self, next, size + 1);
    }
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  expand(expand, all, 0);
  return best;
}

// ---------------------------------------------------------------------------
// BFS distance; empty optional means unreachable.
// ---------------------------------------------------------------------------
inline std::optional<int> oracle_distance(const Graph& g, int s, int t) {
  int n = g.vertex_count();
  if (s < 0 || t < 0 || s >= n || t >= n) throw InvalidInput("endpoint out of range");
  if (s == t) return 0;
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] != -1) continue;
      dist[w] = dist[u] + 1;
      if (w == t) return dist[w];
      q.push(w);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subgraph isomorphism (non-induced): backtracking with degree pruning.
// ---------------------------------------------------------------------------
inline bool oracle_subgraph_iso(const Graph& host, const Graph& pattern) {
  int nh = host.vertex_count(), np = pattern.vertex_count();
  detail::require_budget(nh <= kOracleBudgets.subgraph_host_vertices,
                         "subgraph host capped at " +
                             std::to_string(kOracleBudgets.subgraph_host_vertices) + " vertices");
  detail::require_budget(np <= kOracleBudgets.subgraph_pattern_vertices,
                         "subgraph pattern capped at " +
                             std::to_string(kOracleBudgets.subgraph_pattern_vertices) +
                             " vertices");
  if (np == 0) return true;
  if (np > nh || pattern.edge_count() > host.edge_count()) return false;

  // Order pattern vertices so each one (when possible) touches the mapped
  // prefix; disconnected patterns start fresh components.
  std::vector<int> order;
  std::vector<char> placed(np, 0);
  while (static_cast<int>(order.size()) < np) {
    int pick = -1, best_links = -1;
    for (int v = 0; v < np; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int w : pattern.neighbors(v))
        if (placed[w]) ++links;
      int score = links * 100 + pattern.degree(v);
      if (score > best_links) {
        best_links = score;
        pick = v;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }

  std::vector<int> image(np, -1);
  std::vector<char> used(nh, 0);
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == np) return true;
    int p = order[idx];
    for (int cand = 0; cand < nh; ++cand) {
      if (used[cand] || host.degree(cand) < pattern.degree(p)) continue;
      bool ok = true;
      for (int w : pattern.neighbors(p)) {
        if (image[w] != -1 && !host.has_edge(cand, image[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[p] = cand;
      used[cand] = 1;
      if (self(self, idx + 1)) return true;
      image[p] = -1;
      used[cand] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace gxp
