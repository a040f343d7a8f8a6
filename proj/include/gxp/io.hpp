#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gxp/errors.hpp"
#include "gxp/graph.hpp"

namespace gxp {

// Edge-list text format: first line `n m`, then m lines `u v`, 0-based ids,
// whitespace-separated, LF endings. Lines starting with '#' are comments.

inline Graph parse_edge_list(std::istream& in, const std::string& name = "<stream>") {
  std::string line;
  int lineno = 0;
  auto next_data_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string data;
  if (!next_data_line(data))
    throw ParseError(name + ":" + std::to_string(lineno) + ": missing header line `n m`");
  long long n = -1, m = -1;
  {
    std::istringstream ss(data);
    if (!(ss >> n >> m) || n < 0 || m < 0)
      throw ParseError(name + ":" + std::to_string(lineno) + ": malformed header, expected `n m`");
    std::string extra;
    if (ss >> extra)
      throw ParseError(name + ":" + std::to_string(lineno) + ": trailing tokens after header");
  }

  Graph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    if (!next_data_line(data))
      throw ParseError(name + ":" + std::to_string(lineno) + ": expected " + std::to_string(m) +
                       " edges, got " + std::to_string(k));
    std::istringstream ss(data);
    long long u, v;
    if (!(ss >> u >> v))
      throw ParseError(name + ":" + std::to_string(lineno) + ": expected two integers `u v`");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(name + ":" + std::to_string(lineno) + ": endpoint out of range");
    try {
      g.insert_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const Error& e) {
      throw ParseError(name + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return g;
}

inline Graph read_edge_list(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open");
  return parse_edge_list(f, path);
}

inline void write_edge_list(std::ostream& out, const Graph& g,
                            const std::vector<std::string>& header_comments = {}) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline void write_edge_list(const std::string& path, const Graph& g,
                            const std::vector<std::string>& header_comments = {}) {
  std::ofstream f(path);
  if (!f) throw ParseError(path + ": cannot open for writing");
  write_edge_list(f, g, header_comments);
}

// Update-stream format: one event per line, `+ u v` or `- u v`.
struct EdgeUpdate {
  bool insert;
  int u, v;
};

inline std::vector<EdgeUpdate> parse_update_stream(std::istream& in,
                                                   const std::string& name = "<stream>") {
  std::vector<EdgeUpdate> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ss(line);
    std::string op;
    long long u, v;
    if (!(ss >> op >> u >> v) || (op != "+" && op != "-"))
      throw ParseError(name + ":" + std::to_string(lineno) + ": expected `+ u v` or `- u v`");
    out.push_back({op == "+", static_cast<int>(u), static_cast<int>(v)});
  }
  return out;
}

inline std::vector<EdgeUpdate> read_update_stream(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(path + ": cannot open");
  return parse_update_stream(f, path);
}

// Matrix format: `k`, then k rows of 0/1 (either `0 1 0` or `010`).
inline std::vector<std::vector<int>> parse_binary_matrix(std::istream& in,
                                                         const std::string& name = "<stream>") {
  std::string line;
  int lineno = 0;
  auto next_data_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string data;
  if (!next_data_line(data)) throw ParseError(name + ": missing dimension line `k`");
  int k;
  {
    std::istringstream ss(data);
    if (!(ss >> k) || k <= 0)
      throw ParseError(name + ":" + std::to_string(lineno) + ": malformed dimension");
  }
  std::vector<std::vector<int>> mat(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    if (!next_data_line(data))
      throw ParseError(name + ":" + std::to_string(lineno) + ": expected " + std::to_string(k) + " rows");
    std::istringstream ss(data);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    std::vector<int> row;
    if (toks.size() == 1 && toks[0].size() == static_cast<std::size_t>(k)) {
      for (char c : toks[0]) {
        if (c != '0' && c != '1')
          throw ParseError(name + ":" + std::to_string(lineno) + ": row must be 0/1");
        row.push_back(c - '0');
      }
    } else {
      for (const auto& tok : toks) {
        if (tok != "0" && tok != "1")
          throw ParseError(name + ":" + std::to_string(lineno) + ": row must be 0/1");
        row.push_back(tok == "1" ? 1 : 0);
      }
    }
    if (static_cast<int>(row.size()) != k)
      throw ParseError(name + ":" + std::to_string(lineno) + ": row has " +
                       std::to_string(row.size()) + " entries, expected " + std::to_string(k));
    mat[i] = std::move(row);
  }
  return mat;
}

// FNV-1a over file bytes; used for the `input_hash` field of run reports.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

inline std::string slurp_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace gxp
