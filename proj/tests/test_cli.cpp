#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
  const char* b = std::getenv("GRAPHEXP_BIN");
  return b ? b : "graphexp";
}

std::string tmp_path(const std::string& stem) {
  return std::string(::testing::TempDir()) + stem;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_file = tmp_path("cli_out.txt");
  std::string cmd = bin() + " " + args + " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream f(out_file);
  std::stringstream ss;
  ss << f.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  f << content;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Reports are byte-identical modulo the timing field.
std::string strip_timing(const std::string& s) {
  std::stringstream in(s), out;
  std::string line;
  while (std::getline(in, line))
    if (line.find("timing_ms") == std::string::npos) out << line << "\n";
  return out.str();
}

}  // namespace

TEST(Cli, ExpanderizeRoundTrip) {
  std::string in = tmp_path("c1.el"), out = tmp_path("c1_exp.el"), rep = tmp_path("c1_rep.json");
  write_file(in, "4 3\n0 1\n1 2\n2 3\n");
  auto r = run("expanderize " + in + " " + out + " --report " + rep);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(slurp(rep).find("\"conductance_claim\""), std::string::npos);
  auto oracle = run("oracle conductance " + out);
  EXPECT_EQ(oracle.exit_code, 0);
}

TEST(Cli, MalformedEdgeListIsExitTwoWithLineNumber) {
  std::string in = tmp_path("c2.el");
  write_file(in, "3 2\n0 1\nnot numbers\n");
  auto r = run("expanderize " + in + " /dev/null");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find(":3:"), std::string::npos) << r.out;
}

TEST(Cli, PreconditionViolationIsExitThree) {
  std::string in = tmp_path("c3.el");
  write_file(in, "4 4\n0 1\n1 2\n2 3\n3 0\n");  // m = n: too sparse for densest
  auto r = run("wter densest " + in + " /dev/null");
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.out.find("DensityTooLow"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsAreExitFour) {
  std::string in = tmp_path("c10.el");
  write_file(in, "2 1\n0 1\n");
  auto r = run("wter no-such-problem " + in + " /dev/null");
  EXPECT_EQ(r.exit_code, 4) << r.out;
  auto r2 = run("frobnicate");
  EXPECT_EQ(r2.exit_code, 4);
}

TEST(Cli, OracleValues) {
  std::string in = tmp_path("c4.el");
  write_file(in, "4 4\n0 1\n1 2\n2 3\n3 0\n");  // C4
  EXPECT_EQ(run("oracle max-cut " + in).out, "4\n");
  EXPECT_EQ(run("oracle matching " + in).out, "2\n");
  EXPECT_EQ(run("oracle densest " + in).out, "1\n");
  EXPECT_EQ(run("oracle conductance " + in).out, "1/2\n");
  EXPECT_EQ(run("oracle distance " + in + " --s 0 --t 2").out, "2\n");
  EXPECT_EQ(run("oracle bpm " + in).out, "yes\n");
}

TEST(Cli, WterEmitsMapAndReport) {
  std::string in = tmp_path("c5.el"), out = tmp_path("c5_out.el");
  std::string map = tmp_path("c5_map.json"), rep = tmp_path("c5_rep.json");
  write_file(in, "3 3\n0 1\n1 2\n0 2\n");
  auto r = run("wter matching " + in + " " + out + " --map " + map + " --report " + rep);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  std::string m = slurp(map);
  EXPECT_NE(m.find("additive_offset"), std::string::npos);
  EXPECT_NE(m.find("maximum-matching"), std::string::npos);
}

TEST(Cli, DynamizeEmitsReplayableEvents) {
  std::string in = tmp_path("c6.el"), ups = tmp_path("c6_ups.txt");
  std::string emit = tmp_path("c6_events.txt"), rep = tmp_path("c6_rep.json");
  write_file(in, "6 2\n0 1\n2 3\n");
  write_file(ups, "+ 0 2\n+ 1 3\n- 0 1\n+ 4 5\n");
  auto r = run("dynamize " + in + " " + ups + " --emit " + emit + " --report " + rep +
               " --check-every 2");
  EXPECT_EQ(r.exit_code, 0) << r.out;
  std::string report = slurp(rep);
  EXPECT_NE(report.find("\"replay_sound\": true"), std::string::npos) << report;
  EXPECT_NE(report.find("\"violation\": false"), std::string::npos);
}

TEST(Cli, OmvGenAnswersMatchProduct) {
  std::string mat = tmp_path("c7_m.txt"), q = tmp_path("c7_q.txt");
  std::string ans = tmp_path("c7_a.txt"), rep = tmp_path("c7_rep.json");
  write_file(mat, "2\n10\n01\n");
  write_file(q, "10 10\n10 01\n00 11\n11 11\n");
  auto r = run("omv-gen " + mat + " --queries " + q + " --answers " + ans + " --report " + rep);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_EQ(slurp(ans), "3\n>=5\n>=5\n3\n");
}

TEST(Cli, VerifySelfConsistencyAndTamperDetection) {
  std::string in = tmp_path("c8.el"), out = tmp_path("c8_out.el"), rep = tmp_path("c8_rep.json");
  write_file(in, "5 4\n0 1\n1 2\n2 3\n3 4\n");
  ASSERT_EQ(run("expanderize " + in + " " + out + " --report " + rep).exit_code, 0);
  // Claim the gadget's own conductance bound plus its robust preconditions.
  std::string claim_file = tmp_path("c8_claims.json");
  std::ifstream repf(rep);
  std::stringstream ss;
  ss << repf.rdbuf();
  std::string claimed;
  {
    auto pos = ss.str().find("\"conductance_claim\": \"");
    auto start = pos + 22;
    auto end = ss.str().find('"', start);
    claimed = ss.str().substr(start, end - start);
  }
  write_file(claim_file, std::string("[{\"kind\": \"conductance_at_least\", \"value\": \"") +
                             claimed + "\"}, {\"kind\": \"robust_preconditions\", \"report\": \"" +
                             rep + "\"}]");
  auto ok = run("verify " + claim_file + " --graph " + out);
  EXPECT_EQ(ok.exit_code, 0) << ok.out;
  EXPECT_NE(ok.out.find("PASS conductance_at_least"), std::string::npos);

  // An absurd conductance claim fails with a witness.
  write_file(claim_file, "[{\"kind\": \"conductance_at_least\", \"value\": \"9/10\"}]");
  auto bad = run("verify " + claim_file + " --graph " + out);
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);

  // Unknown claim kinds exit 4.
  write_file(claim_file, "[{\"kind\": \"bogus\"}]");
  EXPECT_EQ(run("verify " + claim_file + " --graph " + out).exit_code, 4);
}

TEST(Cli, DeterministicOutputs) {
  // Identical command lines twice: outputs byte-identical, reports
  // byte-identical once the timing field is stripped.
  std::string in = tmp_path("c9.el");
  write_file(in, "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n");
  for (std::string head : {std::string("expanderize "), std::string("wter matching ")}) {
    std::string out = tmp_path("c9_out.el"), rep = tmp_path("c9_rep.json");
    ASSERT_EQ(run(head + in + " " + out + " --report " + rep).exit_code, 0);
    std::string out1 = slurp(out), rep1 = slurp(rep);
    ASSERT_EQ(run(head + in + " " + out + " --report " + rep).exit_code, 0);
    EXPECT_EQ(out1, slurp(out));
    EXPECT_EQ(strip_timing(rep1), strip_timing(slurp(rep)));
  }
}
