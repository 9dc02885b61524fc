#include <gtest/gtest.h>

#include <json.hpp>

#include "support.hpp"

using nlohmann::json;
using testsupport::CliResult;
using testsupport::influence4_csv;
using testsupport::influence4_pi;
using testsupport::read_file;
using testsupport::run_cli;
using testsupport::temp_path;
using testsupport::write_file;

namespace {

std::string sample_matrix_file() {
  const std::string path = temp_path("sample.csv");
  write_file(path, influence4_csv());
  return path;
}

std::string periodic_matrix_file() {
  const std::string path = temp_path("periodic.csv");
  write_file(path, "0,1\n1,0\n");
  return path;
}

}  // namespace

TEST(CliValidateTest, AcceptsSample) {
  const CliResult r = run_cli("validate " + sample_matrix_file());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("valid stochastic matrix, n=4\n", 0), 0u);
}

TEST(CliValidateTest, JsonReportsDeviations) {
  const CliResult r = run_cli("validate --json " + sample_matrix_file());
  EXPECT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_TRUE(doc["valid"].get<bool>());
  EXPECT_EQ(doc["n"].get<int>(), 4);
  EXPECT_EQ(doc["row_sum_deviations"].size(), 4u);
}

TEST(CliValidateTest, NegativeEntryFailsWithExitOne) {
  const std::string path = temp_path("negative.csv");
  write_file(path, "-0.5,1.5\n0.5,0.5\n");
  EXPECT_EQ(run_cli("validate " + path).code, 1);
  const CliResult r = run_cli("validate --json " + path);
  EXPECT_EQ(r.code, 1);
  const json doc = json::parse(r.out);
  EXPECT_FALSE(doc["valid"].get<bool>());
}

TEST(CliExitCodeTest, MissingFileIsThree) {
  EXPECT_EQ(run_cli("validate " + temp_path("nope.csv")).code, 3);
}

TEST(CliExitCodeTest, UnknownFlagIsThree) {
  EXPECT_EQ(run_cli("validate --bogus x").code, 3);
}

TEST(CliExitCodeTest, UnknownSubcommandIsThree) {
  EXPECT_EQ(run_cli("frobnicate").code, 3);
}

TEST(CliExitCodeTest, HelpIsZero) {
  EXPECT_EQ(run_cli("--help").code, 0);
  EXPECT_EQ(run_cli("synthesize --help").code, 0);
}

TEST(CliAnalyzeTest, JsonStructureOfSample) {
  const CliResult r = run_cli("analyze --json " + sample_matrix_file());
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["n"].get<int>(), 4);
  EXPECT_EQ(doc["nu"].get<int>(), 1);
  EXPECT_EQ(doc["b"].get<int>(), 4);
  EXPECT_EQ(doc["rank_L"].get<int>(), 3);
  EXPECT_TRUE(doc["regular"].get<bool>());
  EXPECT_TRUE(doc["limit_exists"].get<bool>());
  ASSERT_EQ(doc["components"].size(), 1u);
  EXPECT_EQ(doc["components"][0], (json::array({1, 2, 3, 4})));
  EXPECT_EQ(doc["periods"][0].get<int>(), 1);
}

TEST(CliAnalyzeTest, PeriodicSwapReportsNoLimit) {
  const CliResult r = run_cli("analyze --json " + periodic_matrix_file());
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["periods"][0].get<int>(), 2);
  EXPECT_FALSE(doc["limit_exists"].get<bool>());
}

TEST(CliLimitTest, SampleConvergesToStationaryRows) {
  const CliResult r = run_cli("limit --json " + sample_matrix_file());
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  ASSERT_TRUE(doc["converged"].get<bool>());
  const auto limit = doc["limit"].get<std::vector<std::vector<double>>>();
  const degroot::Vector pi = influence4_pi();
  for (const auto& row : limit)
    for (int j = 0; j < 4; ++j)
      EXPECT_NEAR(row[static_cast<std::size_t>(j)],
                  pi[static_cast<std::size_t>(j)], 1e-10);
}

TEST(CliLimitTest, PeriodicExitsTwo) {
  const CliResult r = run_cli("limit --json " + periodic_matrix_file());
  EXPECT_EQ(r.code, 2);
  const json doc = json::parse(r.out);
  EXPECT_FALSE(doc["converged"].get<bool>());
  EXPECT_DOUBLE_EQ(doc["residual"].get<double>(), 2.0);
}

TEST(CliStationaryTest, MethodsAgreeOnSample) {
  const std::string path = sample_matrix_file();
  const degroot::Vector pi = influence4_pi();
  for (const std::string method : {"linear", "trees", "power"}) {
    const CliResult r =
        run_cli("stationary --json --method " + method + " " + path);
    ASSERT_EQ(r.code, 0) << method;
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["method"].get<std::string>(), method);
    const auto got = doc["pi"].get<std::vector<double>>();
    ASSERT_EQ(got.size(), 4u);
    for (int j = 0; j < 4; ++j)
      EXPECT_NEAR(got[static_cast<std::size_t>(j)],
                  pi[static_cast<std::size_t>(j)], 1e-9)
          << method;
  }
}

TEST(CliStationaryTest, PowerOnPeriodicExitsTwo) {
  EXPECT_EQ(
      run_cli("stationary --method power " + periodic_matrix_file()).code, 2);
}

TEST(CliStationaryTest, LinearOnPeriodicStillWorks) {
  const CliResult r = run_cli("stationary " + periodic_matrix_file());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.5 0.5\n");
}

TEST(CliSynthesizeTest, PipelineWithVerify) {
  const std::string pi_path = temp_path("target.csv");
  write_file(pi_path,
             "0.44554455445544555,0.35643564356435642,"
             "0.099009900990099015,0.099009900990099015\n");
  const std::string out = temp_path("cycle_matrix.csv");
  const std::string dot = temp_path("cycle.dot");
  const CliResult r = run_cli("synthesize " + pi_path + " --beta 10/101 --out " +
                              out + " --dot " + dot);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order: 4 -> 3 -> 2 -> 1 -> 4"), std::string::npos);

  // The emitted matrix drives the same consensus as the original procedure.
  EXPECT_EQ(run_cli("verify " + sample_matrix_file() + " " + out).code, 0);

  const std::string dot_text = read_file(dot);
  EXPECT_EQ(dot_text.rfind("digraph G {", 0), 0u);
  EXPECT_NE(dot_text.find("label="), std::string::npos);
}

TEST(CliSynthesizeTest, JsonCarriesWeightsAndMatrix) {
  const std::string pi_path = temp_path("target_json.csv");
  write_file(pi_path, "0.25,0.25,0.25,0.25\n");
  const CliResult r = run_cli("synthesize --json " + pi_path);
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["n"].get<int>(), 4);
  EXPECT_EQ(doc["order"], (json::array({4, 3, 2, 1})));
  for (const auto& x : doc["entering"]) EXPECT_DOUBLE_EQ(x.get<double>(), 1.0);
  for (const auto& x : doc["loop"]) EXPECT_DOUBLE_EQ(x.get<double>(), 0.0);
  EXPECT_EQ(doc["matrix"].size(), 4u);
}

TEST(CliSynthesizeTest, ZeroTargetExitsOne) {
  const std::string pi_path = temp_path("target_zero.csv");
  write_file(pi_path, "0.5,0.5,0\n");
  EXPECT_EQ(run_cli("synthesize " + pi_path).code, 1);
}

TEST(CliSynthesizeTest, CustomOrderIsHonored) {
  const std::string pi_path = temp_path("target_order.csv");
  write_file(pi_path, "0.25,0.25,0.25,0.25\n");
  const CliResult r = run_cli("synthesize --json --order 1,2,3,4 " + pi_path);
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["order"], (json::array({1, 2, 3, 4})));
}

TEST(CliVerifyTest, IdenticalFilesAreEquivalent) {
  const std::string path = sample_matrix_file();
  const CliResult r = run_cli("verify " + path + " " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: equivalent"), std::string::npos);
}

TEST(CliVerifyTest, DifferentConsensusExitsOne) {
  const std::string a = temp_path("uniform.csv");
  write_file(a, "0.5,0.5\n0.5,0.5\n");
  const std::string b = temp_path("skewed.csv");
  write_file(b, "0.9,0.1\n0.9,0.1\n");
  EXPECT_EQ(run_cli("verify " + a + " " + b).code, 1);
}

TEST(CliVerifyTest, PeriodicInputIsIndeterminate) {
  const std::string id2 = temp_path("id2.csv");
  write_file(id2, "1,0\n0,1\n");
  const CliResult r =
      run_cli("verify --json " + periodic_matrix_file() + " " + id2);
  EXPECT_EQ(r.code, 2);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["verdict"].get<std::string>(), "indeterminate");
  EXPECT_TRUE(doc["limit_distance"].is_null());
}

TEST(CliSimulateTest, EmitsTrajectoryCsv) {
  const std::string s0 = temp_path("s0.csv");
  write_file(s0, "0.3,1,0.2,0.8\n");
  const CliResult r =
      run_cli("simulate " + sample_matrix_file() + " " + s0 + " --steps 3");
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_EQ(line, "step,s1,s2,s3,s4");
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind(std::to_string(rows) + ",", 0), 0u);
    ++rows;
  }
  EXPECT_EQ(rows, 4);  // steps 0..3
}

TEST(CliSimulateTest, WritesFileWhenRequested) {
  const std::string s0 = temp_path("s0b.csv");
  write_file(s0, "1,0,0,0\n");
  const std::string out = temp_path("traj.csv");
  const CliResult r = run_cli("simulate " + sample_matrix_file() + " " + s0 +
                              " --steps 2 --out " + out);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const std::string text = read_file(out);
  EXPECT_EQ(text.rfind("step,s1,s2,s3,s4\n", 0), 0u);
}

TEST(CliSimulateTest, LengthMismatchExitsOne) {
  const std::string s0 = temp_path("s0_short.csv");
  write_file(s0, "1,0\n");
  EXPECT_EQ(
      run_cli("simulate " + sample_matrix_file() + " " + s0 + " --steps 1")
          .code,
      1);
}

TEST(CliExportDotTest, HidesLoopsByDefault) {
  const CliResult bare = run_cli("export-dot " + sample_matrix_file());
  ASSERT_EQ(bare.code, 0);
  std::size_t arcs = 0;
  for (std::size_t pos = bare.out.find(" -> "); pos != std::string::npos;
       pos = bare.out.find(" -> ", pos + 1))
    ++arcs;
  EXPECT_EQ(arcs, 7u);

  const CliResult loops =
      run_cli("export-dot --show-loops " + sample_matrix_file());
  arcs = 0;
  for (std::size_t pos = loops.out.find(" -> "); pos != std::string::npos;
       pos = loops.out.find(" -> ", pos + 1))
    ++arcs;
  EXPECT_EQ(arcs, 11u);
}

TEST(CliExportDotTest, JsonArcList) {
  const CliResult r =
      run_cli("export-dot --json --show-loops " + sample_matrix_file());
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["arcs"].size(), 11u);
  EXPECT_EQ(doc["arcs"][0]["tail"].get<int>(), 1);
}

TEST(CliJsonInputTest, JsonMatrixFileWorksEndToEnd) {
  const std::string path = temp_path("sample_as.json");
  degroot::write_matrix(path, testsupport::influence4().matrix());
  const CliResult r = run_cli("stationary --json " + path);
  ASSERT_EQ(r.code, 0);
  const auto got = json::parse(r.out)["pi"].get<std::vector<double>>();
  const degroot::Vector pi = influence4_pi();
  for (int j = 0; j < 4; ++j)
    EXPECT_NEAR(got[static_cast<std::size_t>(j)],
                pi[static_cast<std::size_t>(j)], 1e-12);
}

TEST(CliDeterminismTest, RepeatedRunsAreByteIdentical) {
  const std::string path = sample_matrix_file();
  for (const std::string cmd :
       {"analyze --json ", "limit --json ", "stationary --json ",
        "export-dot "}) {
    const CliResult first = run_cli(cmd + path);
    const CliResult second = run_cli(cmd + path);
    EXPECT_EQ(first.code, second.code) << cmd;
    EXPECT_EQ(first.out, second.out) << cmd;
  }
}
