#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gxp/errors.hpp"
#include "gxp/graph.hpp"
#include "gxp/rational.hpp"

namespace gxp {

struct Cut {
  std::vector<int> side;  // S; complement implied
};

// phi(S) = e(S, V\S) / min(vol(S), vol(V\S)); 0 when the smaller volume is 0.
inline Rat cut_conductance(const Graph& g, const Cut& c) {
  int n = g.vertex_count();
  if (n == 0) throw InvalidInput("empty graph");
  if (c.side.empty() || static_cast<int>(c.side.size()) >= n)
    throw InvalidCut("cut side must be a nonempty proper subset");
  std::vector<char> in_s(n, 0);
  for (int v : c.side) {
    if (v < 0 || v >= n) throw InvalidCut("cut vertex out of range");
    if (in_s[v]) throw InvalidCut("duplicate vertex in cut");
    in_s[v] = 1;
  }
  std::int64_t boundary = 0, vol_s = 0;
  for (int v : c.side) {
    vol_s += g.degree(v);
    for (int w : g.neighbors(v))
      if (!in_s[w]) ++boundary;
  }
  std::int64_t vol_c = g.volume() - vol_s;
  std::int64_t mv = std::min(vol_s, vol_c);
  if (mv == 0) return Rat(0);
  return Rat(boundary, mv);
}

namespace detail {

constexpr int kExactCutMaxVertices = 26;

// Enumerates one representative of every complementary cut pair by pinning
// vertex `order[n-1]` inside S and walking the remaining n-1 vertices in Gray
// order, so each step flips a single vertex. The callback receives the
// boundary size, vol(S), |S|, and the current Gray mask (bit i = order[i]).
// Bit 0 flips every other step, so `order` puts low-degree vertices first.
template <typename F>
void enumerate_cut_pairs(const Graph& g, F&& visit) {
  int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  int pinned = order[n - 1];

  std::vector<char> in_s(n, 0);
  in_s[pinned] = 1;
  std::int64_t boundary = g.degree(pinned);
  std::int64_t vol_s = g.degree(pinned);
  int size_s = 1;

  std::uint32_t steps = (n == 1) ? 0u : (1u << (n - 1)) - 1u;
  std::uint32_t gray = 0;
  visit(boundary, vol_s, size_s, gray);
  for (std::uint32_t it = 1; it <= steps; ++it) {
    int bit = std::countr_zero(it);
    int v = order[bit];
    gray ^= (1u << bit);
    bool entering = (gray >> bit) & 1u;
    std::int64_t inside = 0;
    for (int w : g.neighbors(v)) inside += in_s[w];
    if (entering) {
      in_s[v] = 1;
      vol_s += g.degree(v);
      boundary += g.degree(v) - 2 * inside;
      ++size_s;
    } else {
      in_s[v] = 0;
      vol_s -= g.degree(v);
      boundary -= g.degree(v) - 2 * inside;
      --size_s;
    }
    visit(boundary, vol_s, size_s, gray);
  }
}

template <typename F>
std::vector<int> gray_mask_to_side(const Graph& g, std::uint32_t mask, F&& order_of) {
  int n = g.vertex_count();
  std::vector<int> side;
  for (int i = 0; i < n - 1; ++i)
    if ((mask >> i) & 1u) side.push_back(order_of(i));
  side.push_back(order_of(n - 1));
  std::sort(side.begin(), side.end());
  return side;
}

}  // namespace detail

// Exhaustive minimum conductance; n capped so the 2^(n-1) enumeration stays
// at desk scale.
inline std::pair<Rat, Cut> exact_conductance(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw InvalidInput("need at least 2 vertices");
  if (n > detail::kExactCutMaxVertices)
    throw TooLargeForExact("n = " + std::to_string(n) + " exceeds exact cut budget " +
                           std::to_string(detail::kExactCutMaxVertices));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  std::int64_t total_vol = g.volume();

  bool found = false;
  std::int64_t best_num = 0, best_den = 1;  // compared as fractions
  std::uint32_t best_mask = 0;
  detail::enumerate_cut_pairs(g, [&](std::int64_t boundary, std::int64_t vol_s, int size_s,
                                     std::uint32_t mask) {
    if (size_s == n) return;  // S = V: not a proper cut
    std::int64_t mv = std::min(vol_s, total_vol - vol_s);
    std::int64_t num = boundary, den = mv;
    if (mv == 0) {
      num = 0;
      den = 1;
    }
    if (!found || num * best_den < best_num * den) {
      found = true;
      best_num = num;
      best_den = den;
      best_mask = mask;
    }
  });
  Cut witness{detail::gray_mask_to_side(g, best_mask, [&](int i) { return order[i]; })};
  return {Rat(best_num, best_den), witness};
}

// Exhaustive edge expansion h = min over |S| <= n/2 of e(S, V\S)/|S|.
inline std::pair<Rat, Cut> exact_edge_expansion(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2) throw InvalidInput("need at least 2 vertices");
  if (n > detail::kExactCutMaxVertices)
    throw TooLargeForExact("n = " + std::to_string(n) + " exceeds exact cut budget " +
                           std::to_string(detail::kExactCutMaxVertices));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });

  bool found = false;
  std::int64_t best_num = 0, best_den = 1;
  std::uint32_t best_mask = 0;
  bool best_complement = false;
  detail::enumerate_cut_pairs(g, [&](std::int64_t boundary, std::int64_t /*vol_s*/, int size_s,
                                     std::uint32_t mask) {
    if (size_s == n) return;
    // Of a complementary pair only the smaller side qualifies (|S| <= n/2);
    // at an exact tie both sides give the same ratio.
    int denom = std::min(size_s, n - size_s);
    if (!found || boundary * best_den < best_num * denom) {
      found = true;
      best_num = boundary;
      best_den = denom;
      best_mask = mask;
      best_complement = size_s > n - size_s;
    }
  });
  std::vector<int> side =
      detail::gray_mask_to_side(g, best_mask, [&](int i) { return order[i]; });
  if (best_complement) {
    std::vector<char> in_s(n, 0);
    for (int v : side) in_s[v] = 1;
    std::vector<int> comp;
    for (int v = 0; v < n; ++v)
      if (!in_s[v]) comp.push_back(v);
    side = std::move(comp);
  }
  return {Rat(best_num, best_den), Cut{side}};
}

}  // namespace gxp
