#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gxp/cuts.hpp"
#include "gxp/errors.hpp"
#include "gxp/gadget.hpp"
#include "gxp/graph.hpp"
#include "gxp/io.hpp"
#include "gxp/oracles.hpp"
#include "gxp/rational.hpp"
#include "gxp/spectral.hpp"
#include "gxp/wter.hpp"
#include "json.hpp"

namespace gxp {

inline std::string role_name(Role r) {
  switch (r) {
    case Role::V: return "V";
    case Role::L: return "L";
    case Role::R: return "R";
    case Role::Aux: return "aux";
  }
  return "?";
}

inline Role role_from_name(const std::string& s) {
  if (s == "V") return Role::V;
  if (s == "L") return Role::L;
  if (s == "R") return Role::R;
  if (s == "aux") return Role::Aux;
  throw ParseError("unknown role '" + s + "'");
}

struct ClaimResult {
  std::string kind;
  bool pass = false;
  nlohmann::json evidence;
};

struct VerifyContext {
  std::optional<Graph> graph;                     // --graph
  std::optional<std::vector<EdgeUpdate>> events;  // --events
};

namespace detail {

inline Rat oracle_value(const std::string& problem, const Graph& g, const nlohmann::json& claim) {
  if (problem == "max-cut") return Rat(oracle_max_cut(g));
  if (problem == "maximum-matching") return Rat(oracle_max_matching(g));
  if (problem == "minimum-vertex-cover") return Rat(oracle_min_vertex_cover(g));
  if (problem == "minimum-dominating-set") return Rat(oracle_min_dominating_set(g));
  if (problem == "max-clique") return Rat(oracle_max_clique(g));
  if (problem == "densest-subgraph") return oracle_densest(g).density;
  if (problem == "k-clique-count")
    return Rat(oracle_count_k_cliques(g, claim.at("k").get<int>()));
  throw Error("UnknownClaim", "no oracle for problem '" + problem + "'");
}

inline SolutionMap map_from_json(const nlohmann::json& j) {
  SolutionMap m;
  m.problem = j.value("problem", "");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "additive_offset") m.kind = SolutionMap::Kind::additive_offset;
  else if (kind == "multiplicative_factor") m.kind = SolutionMap::Kind::multiplicative_factor;
  else if (kind == "identity") m.kind = SolutionMap::Kind::identity;
  else if (kind == "affine") m.kind = SolutionMap::Kind::affine;
  else throw Error("UnknownClaim", "unknown map kind '" + kind + "'");
  if (j.contains("value")) m.value = parse_rational(j.at("value").get<std::string>());
  if (j.contains("scale")) m.scale = parse_rational(j.at("scale").get<std::string>());
  return m;
}

}  // namespace detail

// Supported claims:
//   conductance_at_least  {value}                 on --graph
//   offset_identity       {problem, map, input}   on --graph (the reduction)
//   amortization_ratio_max{value, updates_in, m0, n} on --events
//   robust_preconditions  {report}                on --graph
//   replay_soundness      {base, final}           on --events
inline ClaimResult check_claim(const nlohmann::json& claim, const VerifyContext& ctx) {
  ClaimResult r;
  r.kind = claim.at("kind").get<std::string>();

  if (r.kind == "conductance_at_least") {
    if (!ctx.graph) throw InvalidInput("claim needs --graph");
    Rat target = parse_rational(claim.at("value").get<std::string>());
    const Graph& g = *ctx.graph;
    if (g.vertex_count() <= detail::kExactCutMaxVertices) {
      auto [phi, cut] = exact_conductance(g);
      r.pass = phi >= target;
      r.evidence["exact_conductance"] = to_string(phi);
      if (!r.pass) r.evidence["witness_cut"] = cut.side;
    } else {
      double lb = spectral_conductance_lower_bound(g);
      r.pass = Rat(0) < target ? rat_floor(lb) >= target : true;
      r.evidence["spectral_lower_bound"] = lb;
      if (!r.pass) r.evidence["note"] = "spectral bound below target";
    }
    return r;
  }

  if (r.kind == "offset_identity") {
    if (!ctx.graph) throw InvalidInput("claim needs --graph");
    Graph input = read_edge_list(claim.at("input").get<std::string>());
    SolutionMap map = detail::map_from_json(claim.at("map"));
    std::string problem = claim.at("problem").get<std::string>();
    Rat out_value = detail::oracle_value(problem, *ctx.graph, claim);
    Rat in_value = detail::oracle_value(problem, input, claim);
    r.pass = map.invert(out_value) == in_value;
    r.evidence["value_on_input"] = to_string(in_value);
    r.evidence["value_on_output"] = to_string(out_value);
    r.evidence["mapped_back"] = to_string(map.invert(out_value));
    return r;
  }

  if (r.kind == "amortization_ratio_max") {
    if (!ctx.events) throw InvalidInput("claim needs --events");
    Rat bound = parse_rational(claim.at("value").get<std::string>());
    std::int64_t updates = claim.at("updates_in").get<std::int64_t>();
    std::int64_t m0 = claim.at("m0").get<std::int64_t>();
    std::int64_t n = claim.at("n").get<std::int64_t>();
    Rat ratio(static_cast<std::int64_t>(ctx.events->size()), updates + m0 + n);
    r.pass = ratio <= bound;
    r.evidence["events"] = ctx.events->size();
    r.evidence["ratio"] = to_string(ratio);
    return r;
  }

  if (r.kind == "robust_preconditions") {
    if (!ctx.graph) throw InvalidInput("claim needs --graph");
    nlohmann::json report;
    {
      std::string path = claim.at("report").get<std::string>();
      report = nlohmann::json::parse(slurp_file(path));
    }
    const Graph& g = *ctx.graph;
    std::vector<Role> labels;
    for (const auto& s : report.at("labels")) labels.push_back(role_from_name(s));
    if (static_cast<int>(labels.size()) != g.vertex_count())
      throw InvalidInput("label array does not match the graph");
    Rat eps = parse_rational(report.value("eps", "1"));
    int d_x = report.at("d_X").get<int>();
    Rat alpha = parse_rational(report.at("alpha").get<std::string>());
    Rat phi = parse_rational(report.at("phi_X").get<std::string>());

    bool ok = phi > Rat(0);
    std::string why = ok ? "" : "certificate not positive";
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      if (labels[v] != Role::V) continue;
      std::int64_t deg_v = 0, deg_layer = 0;
      for (int w : g.neighbors(v)) {
        if (labels[w] == Role::V) ++deg_v;
        if (labels[w] == Role::L || labels[w] == Role::R) ++deg_layer;
      }
      if (deg_layer == 0) continue;
      if (deg_layer * eps.denominator() < eps.numerator() * deg_v + eps.denominator()) {
        ok = false;
        why = "vertex " + std::to_string(v) + " under-allocated";
      }
    }
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      if (labels[v] != Role::L && labels[v] != Role::R) continue;
      std::int64_t deg = g.degree(v);
      if (deg < d_x || deg * alpha.denominator() > alpha.numerator() * d_x) {
        ok = false;
        why = "layer vertex " + std::to_string(v) + " outside [d_X, alpha d_X]";
      }
    }
    r.pass = ok;
    if (!ok) r.evidence["violation"] = why;
    return r;
  }

  if (r.kind == "replay_soundness") {
    if (!ctx.events) throw InvalidInput("claim needs --events");
    Graph base = read_edge_list(claim.at("base").get<std::string>());
    Graph final_graph = read_edge_list(claim.at("final").get<std::string>());
    if (final_graph.vertex_count() > base.vertex_count())
      base.add_vertices(final_graph.vertex_count() - base.vertex_count());
    bool ok = true;
    std::string why;
    for (const auto& e : *ctx.events) {
      try {
        if (e.insert)
          base.insert_edge(e.u, e.v);
        else
          base.delete_edge(e.u, e.v);
      } catch (const Error& err) {
        ok = false;
        why = err.what();
        break;
      }
    }
    if (ok && !(base == final_graph)) {
      ok = false;
      why = "replayed graph differs from the declared final graph";
    }
    r.pass = ok;
    if (!ok) r.evidence["violation"] = why;
    return r;
  }

  throw Error("UnknownClaim", "unsupported claim kind '" + r.kind + "'");
}

inline std::pair<bool, nlohmann::json> verify_claims(const nlohmann::json& claims,
                                                     const VerifyContext& ctx) {
  bool all = true;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& claim : claims) {
    ClaimResult r = check_claim(claim, ctx);
    all = all && r.pass;
    nlohmann::json j;
    j["kind"] = r.kind;
    j["pass"] = r.pass;
    j["evidence"] = r.evidence;
    results.push_back(j);
  }
  return {all, results};
}

}  // namespace gxp
