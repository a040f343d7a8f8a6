#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gxp/errors.hpp"

namespace gxp {

// Undirected simple graph over vertex ids [0, n). Adjacency lists are kept
// sorted so iteration order (and every downstream artifact) is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  void insert_edge(int u, int v) {
    if (u == v) throw InvalidEdge("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    check_vertex(u);
    check_vertex(v);
    if (has_edge(u, v))
      throw DuplicateEdge("edge (" + std::to_string(u) + "," + std::to_string(v) + ") already present");
    sorted_insert(adj_[u], v);
    sorted_insert(adj_[v], u);
    ++edge_count_;
  }

  void delete_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v))
      throw MissingEdge("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
    sorted_erase(adj_[u], v);
    sorted_erase(adj_[v], u);
    --edge_count_;
  }

  // Appends k fresh isolated vertices; returns the id of the first one.
  int add_vertices(int k) {
    int base = vertex_count();
    adj_.resize(adj_.size() + static_cast<std::size_t>(k));
    return base;
  }

  std::int64_t volume() const { return 2 * edge_count_; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& other) const {
    return adj_ == other.adj_;
  }

  // Component ids by BFS, in increasing-vertex order.
  std::vector<int> components() const {
    std::vector<int> comp(adj_.size(), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < vertex_count(); ++s) {
      if (comp[s] != -1) continue;
      comp[s] = c;
      stack.push_back(s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u])
          if (comp[w] == -1) {
            comp[w] = c;
            stack.push_back(w);
          }
      }
      ++c;
    }
    return comp;
  }

  bool connected() const {
    if (vertex_count() <= 1) return true;
    auto comp = components();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
  }

  // Two-coloring; returns empty vector when an odd cycle exists.
  std::vector<int> bipartition() const {
    std::vector<int> color(adj_.size(), -1);
    std::vector<int> stack;
    for (int s = 0; s < vertex_count(); ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      stack.push_back(s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u]) {
          if (color[w] == -1) {
            color[w] = 1 - color[u];
            stack.push_back(w);
          } else if (color[w] == color[u]) {
            return {};
          }
        }
      }
    }
    return color;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw InvalidEdge("vertex " + std::to_string(v) + " out of range [0," +
                        std::to_string(vertex_count()) + ")");
  }

  static void sorted_insert(std::vector<int>& a, int v) {
    a.insert(std::lower_bound(a.begin(), a.end(), v), v);
  }

  static void sorted_erase(std::vector<int>& a, int v) {
    a.erase(std::lower_bound(a.begin(), a.end(), v));
  }

  std::vector<std::vector<int>> adj_;
  std::int64_t edge_count_ = 0;
};

}  // namespace gxp
