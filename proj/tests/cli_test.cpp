// Copyright 2026 The ckc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ckc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ckc/circuit.hpp"

namespace ckc {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "ckc_cli_test_" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Cli, CompileEmitsCircuitThenMetrics) {
  CliRun r = run({"compile", "--k", "4", "--ih", "1,3", "--strategy", "mid"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2u);
  Circuit c = parse_circuit(lines[0]);
  EXPECT_EQ(c.n, 6);
  auto metrics = nlohmann::json::parse(lines[1]);
  EXPECT_EQ(metrics["strategy"], "mid");
  EXPECT_EQ(metrics["twoq"], 6);
  EXPECT_GT(metrics["depth"].get<int>(), 0);
}

TEST(Cli, CompileRulePolicyPicksLowAtSmallH) {
  CliRun r = run({"compile", "--k", "20", "--ih", "2", "--policy", "rule"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(nlohmann::json::parse(lines[1])["strategy"], "low");
}

TEST(Cli, CompileDefaultPolicyIsEmpiricalAtNarrowWidth) {
  CliRun r = run({"compile", "--k", "4", "--h", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(lines_of(r.out)[1])["strategy"], "mid");
}

TEST(Cli, CompileUsageErrors) {
  EXPECT_EQ(run({"compile", "--ih", "1"}).code, kExitUsage);
  CliRun odd = run({"compile", "--k", "5", "--ih", "1"});
  EXPECT_EQ(odd.code, kExitUsage);
  EXPECT_NE(odd.err.find("k must be even"), std::string::npos);
  EXPECT_EQ(run({"compile", "--k", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"compile", "--k", "4", "--ih", "1", "--h", "1"}).code,
            kExitUsage);
  EXPECT_EQ(run({"compile", "--k", "4", "--ih", "1", "--strategy", "mid",
                 "--policy", "rule"})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"compile", "--k", "4", "--ih", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"compile", "--k", "4", "--h", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"compile", "--k", "4", "--ih", "1", "--strategy", "huge"})
                .code,
            kExitUsage);
}

TEST(Cli, VerifyPipelineRoundTrip) {
  const std::string path = temp_path("roundtrip.json");
  CliRun c = run({"compile", "--k", "4", "--ih", "2,3", "--strategy", "high",
                  "--out", path});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_TRUE(c.out.empty());
  // The file holds the circuit document then the metrics line; verify reads
  // the first document, so compile output feeds it unmodified.
  ASSERT_EQ(lines_of(slurp(path)).size(), 2u);
  CliRun v = run({"verify", "--k", "4", "--ih", "2,3", "--circuit", path});
  EXPECT_EQ(v.code, kExitOk) << v.err;
  auto report = nlohmann::json::parse(lines_of(v.out)[0]);
  EXPECT_EQ(report["pass"], true);
  EXPECT_EQ(report["k"], 4);
}

TEST(Cli, VerifyTamperedCircuitFailsWithCode3) {
  const std::string path = temp_path("tampered.json");
  CliRun c = run({"compile", "--k", "4", "--ih", "1", "--strategy", "low",
                  "--out", path});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  auto j = nlohmann::json::parse(lines_of(slurp(path))[0]);
  j["gates"].push_back({{"g", "P"}, {"q", {1}}});
  const std::string tampered_path = temp_path("tampered_circuit.json");
  std::ofstream(tampered_path) << j.dump();
  CliRun v = run({"verify", "--k", "4", "--ih", "1", "--circuit",
                  tampered_path});
  EXPECT_EQ(v.code, kExitVerification);
  auto report = nlohmann::json::parse(lines_of(v.out)[0]);
  EXPECT_EQ(report["pass"], false);
}

TEST(Cli, VerifyBadInputsAreUsageErrors) {
  const std::string garbage_path = temp_path("garbage.json");
  std::ofstream(garbage_path) << "not a circuit";
  EXPECT_EQ(
      run({"verify", "--k", "4", "--ih", "1", "--circuit", garbage_path}).code,
      kExitUsage);
  EXPECT_EQ(run({"verify", "--k", "4", "--ih", "1", "--circuit",
                 temp_path("missing.json")})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"verify", "--k", "4", "--ih", "1"}).code, kExitUsage);
  // Width mismatch between circuit and code instance.
  const std::string narrow_path = temp_path("narrow.json");
  std::ofstream(narrow_path) << R"({"n":4,"gates":[]})";
  EXPECT_EQ(
      run({"verify", "--k", "4", "--ih", "1", "--circuit", narrow_path}).code,
      kExitUsage);
}

TEST(Cli, SweepIsDeterministicAndWellFormed) {
  CliRun a = run({"sweep", "--k", "4"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  CliRun b = run({"sweep", "--k", "4"});
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> lines = lines_of(a.out);
  // 16 placements over h = 0..4, three strategies each, plus two header rows.
  ASSERT_EQ(lines.size(), 50u);
  EXPECT_EQ(lines[0], "# ckc csv v1");
  EXPECT_EQ(lines[1], "k,h,placement,label,depth,twoq");
  EXPECT_EQ(lines[2].substr(0, 8), "4,0,-,lo");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), ','), 5);
  }
  // Exhaustive flag changes nothing at a width this small.
  CliRun c = run({"sweep", "--k", "4", "--exhaustive"});
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, SweepPlacementColumnUsesPlusJoins) {
  CliRun r = run({"sweep", "--k", "4", "--strategies", "mid"});
  ASSERT_EQ(r.code, kExitOk);
  bool saw_pair = false;
  for (const std::string& line : lines_of(r.out)) {
    if (line.find(",1+2,") != std::string::npos) saw_pair = true;
  }
  EXPECT_TRUE(saw_pair);
}

TEST(Cli, SweepLcsAllEnumeratesSolutions) {
  CliRun r = run({"sweep", "--k", "2", "--lcs-all"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines = lines_of(r.out);
  // Four placements (h=0, two h=1, h=2) x 8 labels + 2 header lines.
  ASSERT_EQ(lines.size(), 34u);
  EXPECT_NE(lines[2].find("lcs0"), std::string::npos);
  EXPECT_NE(lines[9].find("lcs7"), std::string::npos);
}

TEST(Cli, SweepExhaustiveGuardsAgainstBlowup) {
  CliRun r = run({"sweep", "--k", "40", "--exhaustive"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("too large"), std::string::npos);
}

TEST(Cli, SimulateDefaultSweepsInteriorPlacements) {
  CliRun r = run({"simulate", "--k", "4", "--shots", "400", "--seed", "9",
                  "--p1", "0.01", "--p2", "0.01"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 8u);  // header x2 + (k-1)=3 placements x 2 variants
  EXPECT_EQ(lines[1],
            "k,h,placement,strategy,p1,p2,shots,seed,p_acc,p_acc_ci,p_succ,"
            "p_succ_ci,depth,twoq");
  int mid_rows = 0;
  int pbs_rows = 0;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (lines[i].find(",mid,") != std::string::npos) ++mid_rows;
    if (lines[i].find(",pbs,") != std::string::npos) ++pbs_rows;
  }
  EXPECT_EQ(mid_rows, 3);
  EXPECT_EQ(pbs_rows, 3);
  CliRun again = run({"simulate", "--k", "4", "--shots", "400", "--seed", "9",
                      "--p1", "0.01", "--p2", "0.01"});
  EXPECT_EQ(r.out, again.out);
}

TEST(Cli, SimulateNoiselessReportsCertainty) {
  CliRun r = run({"simulate", "--k", "4", "--ih", "1,2", "--shots", "200"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 4u);  // one placement, two variants
  for (std::size_t i = 2; i < lines.size(); ++i) {
    EXPECT_NE(lines[i].find(",1.000000,"), std::string::npos) << lines[i];
    EXPECT_NE(lines[i].find(",1+2,"), std::string::npos);
  }
}

TEST(Cli, SimulateRejectsBadRates) {
  EXPECT_EQ(run({"simulate", "--k", "4", "--p1", "1.5"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--k", "4", "--p2", "-0.2"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--k", "4", "--shots", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--k", "4", "--p1", "abc"}).code, kExitUsage);
}

TEST(Cli, EnumerateLcsJsonShape) {
  CliRun r = run({"enumerate-lcs", "--k", "2", "--ih", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["Ih"], nlohmann::json::array({1}));
  ASSERT_EQ(j["solutions"].size(), 8u);
  for (int label = 0; label < 8; ++label) {
    const auto& s = j["solutions"][label];
    EXPECT_EQ(s["label"], label);
    ASSERT_EQ(s["a"].size(), 2u);
    EXPECT_GT(s["depth"].get<int>(), 0);
    EXPECT_GE(s["twoq"].get<int>(), 0);
    Circuit c = parse_circuit(s["circuit"].dump());
    EXPECT_EQ(c.n, 4);
  }
}

TEST(Cli, EnumerateLcsCsvShape) {
  CliRun r = run({"enumerate-lcs", "--k", "2", "--ih", "1", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<std::string> lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(lines[0], "# ckc csv v1");
  EXPECT_EQ(lines[2].substr(0, 10), "2,1,1,lcs0");
  EXPECT_EQ(lines[9].substr(0, 10), "2,1,1,lcs7");
  EXPECT_EQ(run({"enumerate-lcs", "--k", "2", "--ih", "1", "--format", "xml"})
                .code,
            kExitUsage);
}

TEST(Cli, OutFlagWritesFileInsteadOfStream) {
  const std::string path = temp_path("sweep.csv");
  CliRun r = run({"sweep", "--k", "2", "--out", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::string content = slurp(path);
  EXPECT_EQ(content.substr(0, 12), "# ckc csv v1");
}

TEST(Cli, UnknownCommandAndMissingCommand) {
  CliRun r = run({"frobnicate"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("usage:"), std::string::npos);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--k", "4", "stray"}).code, kExitUsage);
}

}  // namespace
}  // namespace ckc
