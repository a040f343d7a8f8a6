// Command-line entry point: expanderize / dynamize / wter / omv-gen /
// oracle / verify. Exit codes: 0 ok, 2 parse error, 3 precondition or
// budget violation, 4 usage.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gxp/cuts.hpp"
#include "gxp/dynamic.hpp"
#include "gxp/gadget.hpp"
#include "gxp/graph.hpp"
#include "gxp/io.hpp"
#include "gxp/omv.hpp"
#include "gxp/oracles.hpp"
#include "gxp/spectral.hpp"
#include "gxp/verify.hpp"
#include "gxp/wter.hpp"
#include "json.hpp"

using namespace gxp;
using nlohmann::json;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void write_json(const std::string& path, const json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError(path + ": cannot open for writing");
  f << j.dump(2) << "\n";
}

json labels_json(const std::vector<Role>& labels) {
  json arr = json::array();
  for (Role r : labels) arr.push_back(role_name(r));
  return arr;
}

json gadget_report(const ExpanderizedGraph& xg) {
  json j;
  j["N"] = xg.n_side;
  j["d_X"] = xg.expander_degree;
  j["phi_X"] = to_string(xg.cert_phi);
  j["alpha"] = to_string(xg.alpha);
  j["eps"] = to_string(xg.eps);
  j["delta"] = to_string(xg.delta);
  j["conductance_claim"] = to_string(xg.conductance_claim);
  j["blowup_vertices"] = xg.blowup_vertices;
  j["blowup_edges"] = xg.blowup_edges;
  j["labels"] = labels_json(xg.labels);
  j["certificates"] = json::array({xg.cert.to_json()});
  auto check = check_robust_preconditions(xg);
  j["invariant_checks"]["robust_preconditions"] = check.ok;
  if (!check.ok) j["invariant_checks"]["detail"] = check.detail;
  return j;
}

std::string echo_command(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += " ";
    s += argv[i];
  }
  return s;
}

int run_expanderize(const std::string& cmdline, const std::string& mode, const std::string& eps_s,
                    const std::string& delta_s, const std::string& in_path,
                    const std::string& out_path, const std::string& report_path) {
  Timer timer;
  Graph g = read_edge_list(in_path);
  GadgetParams params;
  params.eps = parse_rational(eps_s);
  params.delta = parse_rational(delta_s);
  if (mode == "plain") params.mode = GadgetParams::Mode::plain;
  else if (mode == "tradeoff") params.mode = GadgetParams::Mode::tradeoff;
  else if (mode == "bipartite") params.mode = GadgetParams::Mode::bipartite;
  else throw Error("Usage", "unknown mode '" + mode + "'");

  ExpanderizedGraph xg = build_core_gadget(g, params);
  write_edge_list(out_path, xg.graph);

  json rep = gadget_report(xg);
  rep["command"] = cmdline;
  rep["input_hash"] = fnv1a_hex(slurp_file(in_path));
  rep["parameters"] = {{"mode", mode}, {"eps", eps_s}, {"delta", delta_s}};
  rep["timing_ms"] = timer.ms();
  write_json(report_path, rep);
  return 0;
}

int run_dynamize(const std::string& cmdline, const std::string& in_path,
                 const std::string& updates_path, const std::string& emit_path,
                 const std::string& report_path, int check_every) {
  Timer timer;
  Graph g0 = read_edge_list(in_path);
  auto updates = read_update_stream(updates_path);
  DynamicExpanderState st = dyn_init(g0);
  Graph snapshot = st.gexp;

  std::ofstream emit;
  if (!emit_path.empty()) {
    emit.open(emit_path);
    if (!emit) throw ParseError(emit_path + ": cannot open for writing");
  }
  json checks = json::array();
  std::int64_t processed = 0;
  auto maybe_check = [&]() {
    if (check_every <= 0 || processed % check_every != 0) return;
    json c;
    c["after_updates"] = processed;
    bool inv = true;
    for (int v = 0; v < st.n && inv; ++v)
      inv = st.deg_l[v] >= std::max<std::int64_t>(3, (st.g.degree(v) + 1) / 2);
    inv = inv && st.l_index.min_degree() >= st.d_x &&
          st.l_index.max_degree() <= 4 * st.d_x;
    c["robust_invariants"] = inv;
    c["spectral_lower_bound"] = spectral_conductance_lower_bound(st.gexp);
    checks.push_back(c);
  };
  for (const auto& up : updates) {
    auto events = up.insert ? dyn_insert(st, up.u, up.v) : dyn_delete(st, up.u, up.v);
    ++processed;
    if (emit.is_open())
      for (const auto& e : events)
        emit << (e.op == UpdateEvent::Op::insert ? "+ " : "- ") << e.u << " " << e.v << "\n";
    maybe_check();
  }
  Graph replayed = replay_events(snapshot, st.log, st.gexp.vertex_count());

  auto amort = st.amortization_report();
  json rep;
  rep["command"] = cmdline;
  rep["input_hash"] = fnv1a_hex(slurp_file(in_path));
  rep["updates_hash"] = fnv1a_hex(slurp_file(updates_path));
  rep["total_updates_in"] = amort.total_updates_in;
  rep["total_events_out"] = amort.total_events_out;
  rep["initial_events"] = amort.initial_events;
  rep["ratio"] = amort.ratio;
  rep["amort_bound"] = kAmortBound;
  rep["violation"] = amort.violation;
  rep["replay_sound"] = replayed == st.gexp;
  rep["checks"] = checks;
  rep["d_X"] = st.d_x;
  rep["N"] = st.n_side;
  rep["timing_ms"] = timer.ms();
  write_json(report_path, rep);
  return amort.violation ? 3 : 0;
}

int run_wter(const std::string& cmdline, const std::string& problem, const std::string& in_path,
             const std::string& out_path, const std::string& map_path,
             const std::string& report_path, const std::string& eps_s, int c_param, int k_param,
             const std::string& pattern_path, bool dynamic) {
  Timer timer;
  Graph g = read_edge_list(in_path);
  Rat eps = parse_rational(eps_s);

  json rep;
  rep["command"] = cmdline;
  rep["input_hash"] = fnv1a_hex(slurp_file(in_path));
  rep["problem"] = problem;

  auto finish = [&](const Graph& out, const SolutionMap& map) {
    write_edge_list(out_path, out);
    if (!map_path.empty()) write_json(map_path, map.to_json());
    rep["solution_map"] = map.to_json();
    rep["timing_ms"] = timer.ms();
    write_json(report_path, rep);
  };

  if (problem == "densify") {
    auto [gc, map] = wter_densify_clique_attach(g, c_param);
    rep["C"] = c_param;
    finish(gc, map);
    return 0;
  }

  WterResult r;
  if (problem == "max-cut") {
    r = wter_max_cut(g, eps);
  } else if (problem == "densest") {
    if (dynamic) rep["note"] = "dynamic densest drives updates through dynamize";
    r = wter_densest(g);
  } else if (problem == "matching") {
    r = wter_matching(g);
  } else if (problem == "bpm") {
    r = wter_bipartite_perfect_matching(g);
  } else if (problem == "k-clique") {
    r = wter_k_clique(g, k_param);
  } else if (problem == "h-subgraph") {
    if (pattern_path.empty()) throw Error("Usage", "h-subgraph needs --pattern");
    Graph pattern = read_edge_list(pattern_path);
    r = wter_h_subgraph(g, pattern);
  } else if (problem == "max-clique") {
    r = wter_max_clique(g, eps);
  } else if (problem == "dominating-set") {
    r = wter_dominating_set(g, eps);
  } else {
    throw Error("Usage", "unknown wter problem '" + problem + "'");
  }
  rep.update(gadget_report(r.xg));
  rep["extra"] = r.extra;
  finish(r.xg.graph, r.map);
  return 0;
}

int run_omv_gen(const std::string& cmdline, const std::string& matrix_path,
                const std::string& queries_path, const std::string& emit_path,
                const std::string& answers_path, const std::string& report_path) {
  Timer timer;
  std::ifstream mf(matrix_path);
  if (!mf) throw ParseError(matrix_path + ": cannot open");
  auto matrix = parse_binary_matrix(mf, matrix_path);
  OmvInstance inst = omv_build(matrix);

  std::ifstream qf(queries_path);
  if (!qf) throw ParseError(queries_path + ": cannot open");
  std::ofstream answers(answers_path);
  if (!answers) throw ParseError(answers_path + ": cannot open for writing");

  auto parse_bits = [&](const std::string& tok, int lineno) {
    if (static_cast<int>(tok.size()) != inst.k)
      throw ParseError(queries_path + ":" + std::to_string(lineno) + ": vector length " +
                       std::to_string(tok.size()) + ", expected " + std::to_string(inst.k));
    std::vector<int> bits(inst.k);
    for (int i = 0; i < inst.k; ++i) {
      if (tok[i] != '0' && tok[i] != '1')
        throw ParseError(queries_path + ":" + std::to_string(lineno) + ": bits must be 0/1");
      bits[i] = tok[i] - '0';
    }
    return bits;
  };

  std::string line;
  int lineno = 0, queries = 0;
  while (std::getline(qf, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::istringstream ss(line);
    std::string ut, vt;
    if (!(ss >> ut >> vt))
      throw ParseError(queries_path + ":" + std::to_string(lineno) + ": expected `u v` bitstrings");
    OmvAnswer ans = omv_query(inst, parse_bits(ut, lineno), parse_bits(vt, lineno));
    answers << (ans == OmvAnswer::dist3 ? "3" : ">=5") << "\n";
    ++queries;
  }
  if (!emit_path.empty()) {
    std::ofstream emit(emit_path);
    if (!emit) throw ParseError(emit_path + ": cannot open for writing");
    for (const auto& e : inst.log)
      emit << (e.insert ? "+ " : "- ") << e.u << " " << e.v << "\n";
  }
  json rep;
  rep["command"] = cmdline;
  rep["input_hash"] = fnv1a_hex(slurp_file(matrix_path));
  rep["k"] = inst.k;
  rep["queries"] = queries;
  rep["edge_updates"] = inst.log.size();
  rep["conductance_claim"] = to_string(inst.conductance_claim);
  rep["x_non_edge"] = {inst.x_non_edge.first, inst.x_non_edge.second};
  rep["timing_ms"] = timer.ms();
  write_json(report_path, rep);
  return 0;
}

int run_oracle(const std::string& problem, const std::string& in_path, int k, int s, int t,
               const std::string& pattern_path) {
  Graph g = read_edge_list(in_path);
  if (problem == "max-cut") {
    std::cout << oracle_max_cut(g) << "\n";
  } else if (problem == "densest") {
    std::cout << to_string(oracle_densest(g).density) << "\n";
  } else if (problem == "matching") {
    std::cout << oracle_max_matching(g) << "\n";
  } else if (problem == "bpm") {
    auto parts = g.bipartition();
    if (parts.empty()) throw NotBipartite("input has an odd cycle");
    std::cout << (oracle_bipartite_pm(g, parts) ? "yes" : "no") << "\n";
  } else if (problem == "count-k-cliques") {
    std::cout << oracle_count_k_cliques(g, k) << "\n";
  } else if (problem == "vertex-cover") {
    std::cout << oracle_min_vertex_cover(g) << "\n";
  } else if (problem == "dominating-set") {
    std::cout << oracle_min_dominating_set(g) << "\n";
  } else if (problem == "max-clique") {
    std::cout << oracle_max_clique(g) << "\n";
  } else if (problem == "distance") {
    auto d = oracle_distance(g, s, t);
    if (d) std::cout << *d << "\n";
    else std::cout << "inf" << "\n";
  } else if (problem == "subgraph-iso") {
    if (pattern_path.empty()) throw Error("Usage", "subgraph-iso needs --pattern");
    Graph pattern = read_edge_list(pattern_path);
    std::cout << (oracle_subgraph_iso(g, pattern) ? "yes" : "no") << "\n";
  } else if (problem == "conductance") {
    auto [phi, cut] = exact_conductance(g);
    std::cout << to_string(phi) << "\n";
  } else if (problem == "edge-expansion") {
    auto [h, cut] = exact_edge_expansion(g);
    std::cout << to_string(h) << "\n";
  } else {
    throw Error("Usage", "unknown oracle problem '" + problem + "'");
  }
  return 0;
}

int run_verify(const std::string& cmdline, const std::string& claims_path,
               const std::string& graph_path, const std::string& events_path,
               const std::string& report_path) {
  Timer timer;
  json claims = json::parse(slurp_file(claims_path));
  if (claims.is_object() && claims.contains("claims")) claims = claims["claims"];
  VerifyContext ctx;
  if (!graph_path.empty()) ctx.graph = read_edge_list(graph_path);
  if (!events_path.empty()) ctx.events = read_update_stream(events_path);
  auto [all_pass, results] = verify_claims(claims, ctx);
  for (const auto& r : results)
    std::cout << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["kind"].get<std::string>()
              << "\n";
  json rep;
  rep["command"] = cmdline;
  rep["all_pass"] = all_pass;
  rep["results"] = results;
  rep["timing_ms"] = timer.ms();
  write_json(report_path, rep);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic worst-case to expander-case graph toolkit"};
  app.require_subcommand(1);
  std::string cmdline = echo_command(argc, argv);
  std::function<int()> action;

  // expanderize
  {
    auto* cmd = app.add_subcommand("expanderize", "augment a graph into a certified expander");
    auto mode = std::make_shared<std::string>("plain");
    auto eps = std::make_shared<std::string>("1");
    auto delta = std::make_shared<std::string>("1");
    auto in = std::make_shared<std::string>(), out = std::make_shared<std::string>();
    auto report = std::make_shared<std::string>();
    cmd->add_option("--mode", *mode, "plain|tradeoff|bipartite");
    cmd->add_option("--eps", *eps, "per-vertex edge fraction p/q");
    cmd->add_option("--delta", *delta, "side-size fraction p/q");
    cmd->add_option("in", *in, "input edge list")->required();
    cmd->add_option("out", *out, "output edge list")->required();
    cmd->add_option("--report", *report, "report JSON path (default stdout)");
    cmd->callback([=, &action]() {
      action = [=]() { return run_expanderize(cmdline, *mode, *eps, *delta, *in, *out, *report); };
    });
  }
  // dynamize
  {
    auto* cmd = app.add_subcommand("dynamize", "maintain the expander under edge updates");
    auto in = std::make_shared<std::string>(), updates = std::make_shared<std::string>();
    auto emit = std::make_shared<std::string>(), report = std::make_shared<std::string>();
    auto stride = std::make_shared<int>(0);
    cmd->add_option("in", *in, "initial edge list")->required();
    cmd->add_option("updates", *updates, "update stream (`+ u v` / `- u v`)")->required();
    cmd->add_option("--emit", *emit, "emitted event stream path");
    cmd->add_option("--report", *report, "report JSON path (default stdout)");
    cmd->add_option("--check-every", *stride, "verification sampling stride");
    cmd->callback([=, &action]() {
      action = [=]() { return run_dynamize(cmdline, *in, *updates, *emit, *report, *stride); };
    });
  }
  // wter
  {
    auto* cmd = app.add_subcommand("wter", "problem-specific reduction with a solution map");
    auto problem = std::make_shared<std::string>();
    auto in = std::make_shared<std::string>(), out = std::make_shared<std::string>();
    auto map = std::make_shared<std::string>(), report = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>("1/2");
    auto c = std::make_shared<int>(1);
    auto k = std::make_shared<int>(3);
    auto pattern = std::make_shared<std::string>();
    auto dynamic = std::make_shared<bool>(false);
    cmd->add_option("problem", *problem,
                    "max-cut|densest|densify|matching|bpm|k-clique|h-subgraph|max-clique|"
                    "dominating-set")
        ->required();
    cmd->add_option("in", *in, "input edge list")->required();
    cmd->add_option("out", *out, "output edge list")->required();
    cmd->add_option("--map", *map, "solution map JSON path");
    cmd->add_option("--report", *report, "report JSON path (default stdout)");
    cmd->add_option("--eps", *eps, "tradeoff parameter p/q");
    cmd->add_option("--c", *c, "clique-attachment parameter C");
    cmd->add_option("--k", *k, "clique size k");
    cmd->add_option("--pattern", *pattern, "pattern edge list for h-subgraph");
    cmd->add_flag("--dynamic", *dynamic, "note the dynamic variant in the report");
    cmd->callback([=, &action]() {
      action = [=]() {
        return run_wter(cmdline, *problem, *in, *out, *map, *report, *eps, *c, *k, *pattern,
                        *dynamic);
      };
    });
  }
  // omv-gen
  {
    auto* cmd = app.add_subcommand("omv-gen", "matrix-vector hardness instance generator");
    auto matrix = std::make_shared<std::string>(), queries = std::make_shared<std::string>();
    auto emit = std::make_shared<std::string>(), answers = std::make_shared<std::string>();
    auto report = std::make_shared<std::string>();
    cmd->add_option("matrix", *matrix, "binary matrix file")->required();
    cmd->add_option("--queries", *queries, "query file (`ubits vbits` per line)")->required();
    cmd->add_option("--emit", *emit, "emitted edge-update stream path");
    cmd->add_option("--answers", *answers, "answers file path")->required();
    cmd->add_option("--report", *report, "report JSON path (default stdout)");
    cmd->callback([=, &action]() {
      action = [=]() { return run_omv_gen(cmdline, *matrix, *queries, *emit, *answers, *report); };
    });
  }
  // oracle
  {
    auto* cmd = app.add_subcommand("oracle", "exact reference solvers");
    auto problem = std::make_shared<std::string>(), in = std::make_shared<std::string>();
    auto k = std::make_shared<int>(3);
    auto s = std::make_shared<int>(0), t = std::make_shared<int>(0);
    auto pattern = std::make_shared<std::string>();
    cmd->add_option("problem", *problem,
                    "max-cut|densest|matching|bpm|count-k-cliques|vertex-cover|dominating-set|"
                    "max-clique|distance|subgraph-iso|conductance|edge-expansion")
        ->required();
    cmd->add_option("in", *in, "input edge list")->required();
    cmd->add_option("--k", *k, "clique size for count-k-cliques");
    cmd->add_option("--s", *s, "source for distance");
    cmd->add_option("--t", *t, "target for distance");
    cmd->add_option("--pattern", *pattern, "pattern edge list for subgraph-iso");
    cmd->callback([=, &action]() {
      action = [=]() { return run_oracle(*problem, *in, *k, *s, *t, *pattern); };
    });
  }
  // verify
  {
    auto* cmd = app.add_subcommand("verify", "check claims against graphs and event logs");
    auto claims = std::make_shared<std::string>();
    auto graph = std::make_shared<std::string>(), events = std::make_shared<std::string>();
    auto report = std::make_shared<std::string>();
    cmd->add_option("claims", *claims, "claims JSON file")->required();
    cmd->add_option("--graph", *graph, "graph the claims refer to");
    cmd->add_option("--events", *events, "event log the claims refer to");
    cmd->add_option("--report", *report, "report JSON path (default stdout)");
    cmd->callback([=, &action]() {
      action = [=]() { return run_verify(cmdline, *claims, *graph, *events, *report); };
    });
  }

  try {
    app.parse(argc, argv);
    return action ? action() : 4;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 4;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.code() == "Usage" || e.code() == "UnknownClaim") {
      std::cerr << "usage error: " << e.what() << "\n";
      return 4;
    }
    std::cerr << e.code() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
