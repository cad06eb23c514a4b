// Copyright 2026 The commcp Authors.
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "commcp/cli/app.hpp"

namespace commcp::cli {
namespace {

namespace fs = std::filesystem;

std::string data(const std::string& name) { return std::string(COMMCP_TEST_DATA) + "/" + name; }

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("commcp_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::vector<std::string> analyze_args() {
  return {"analyze", "-g", data("tiny_edges.tsv"), "--partition", data("tiny_partition.csv"),
          "--attributes", data("tiny_attributes.csv"), "--truth", data("tiny_truth.csv"),
          "--group-by", "field", "--leader-keys", "party", "--seed", "9"};
}

TEST_F(CliTest, Version) {
  const auto r = invoke({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("commcp 0.1.0"), std::string::npos);
}

TEST_F(CliTest, NoSubcommandIsUsageError) { EXPECT_EQ(invoke({}).code, 2); }

TEST_F(CliTest, AnalyzeTable) {
  const auto r = invoke(analyze_args());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("1100"), std::string::npos);
}

TEST_F(CliTest, AnalyzeJsonReport) {
  auto args = analyze_args();
  args.insert(args.end(), {"--format", "json"});
  const auto r = invoke(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["tool"], "commcp");
  EXPECT_EQ(doc["command"], "analyze");
  EXPECT_EQ(doc["seed"], 9);
  EXPECT_EQ(doc["partition"]["K"], 4);
  EXPECT_EQ(doc["search"]["assignment"], "1100");
  EXPECT_EQ(doc["search"]["mode_used"], "exhaustive");
  EXPECT_DOUBLE_EQ(doc["evaluation"]["ba"].get<double>(), 1.0);
  EXPECT_EQ(doc["nodes"].size(), 24u);
  EXPECT_EQ(doc["leaders"].size(), 12u);
  EXPECT_FALSE(doc.contains("generated_at"));
  EXPECT_TRUE(doc["config"].is_string());
}

TEST_F(CliTest, EchoedConfigReproducesReport) {
  auto args = analyze_args();
  args.insert(args.end(), {"--format", "json"});
  const auto first = invoke(args);
  ASSERT_EQ(first.code, 0) << first.err;
  const auto config = nlohmann::json::parse(first.out)["config"].get<std::string>();
  {
    std::ofstream out(path("echo.ini"));
    out << config;
  }
  const auto second = invoke({"--config", path("echo.ini"), "analyze"});
  ASSERT_EQ(second.code, 0) << second.err;
  EXPECT_EQ(first.out, second.out);
}

TEST_F(CliTest, TimestampOnlyWhenAsked) {
  auto args = analyze_args();
  args.insert(args.end(), {"--format", "json", "--timestamp"});
  const auto r = invoke(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("generated_at"));
}

TEST_F(CliTest, PartitionSourceErrors) {
  EXPECT_EQ(invoke({"analyze", "-g", data("tiny_edges.tsv")}).code, 2);
  EXPECT_EQ(invoke({"analyze", "-g", data("tiny_edges.tsv"), "--louvain", "--partition",
                    data("tiny_partition.csv")})
                .code,
            2);
  EXPECT_EQ(invoke({"analyze", "--louvain"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "-g", path("missing.tsv"), "--louvain"}).code, 3);
  EXPECT_EQ(invoke({"analyze", "-g", data("tiny_edges.tsv"), "--attribute", "nothing",
                    "--attributes", data("tiny_attributes.csv")})
                .code,
            3);
}

TEST_F(CliTest, TooFewCommunitiesIsInfeasible) {
  {
    std::ofstream out(path("three.csv"));
    out << "node,community\n";
    for (int i = 0; i < 24; ++i) out << "n" << i << "," << (i % 3) << "\n";
  }
  const auto r = invoke({"analyze", "-g", data("tiny_edges.tsv"), "--partition", path("three.csv")});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("at least four communities"), std::string::npos);
}

TEST_F(CliTest, AttributePartition) {
  const auto r = invoke({"analyze", "-g", data("tiny_edges.tsv"), "--attributes",
                         data("tiny_attributes.csv"), "--attribute", "field", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["search"]["assignment"], "1100");
}

TEST_F(CliTest, DetectCommunitiesWritesPartition) {
  const auto r = invoke({"detect-communities", "-g", data("tiny_edges.tsv"), "-o", path("p.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto text = slurp(path("p.csv"));
  EXPECT_NE(text.find("# communities"), std::string::npos);
  EXPECT_NE(text.find("node,community"), std::string::npos);
  const auto again = invoke({"analyze", "-g", data("tiny_edges.tsv"), "--partition", path("p.csv")});
  EXPECT_TRUE(again.code == 0 || again.code == 4) << again.err;
}

TEST_F(CliTest, SimulateCsvIsDeterministicAcrossWorkers) {
  const std::vector<std::string> base{"simulate", "--n", "100", "--k", "5", "--lambda", "50",
                                      "--size-modes", "uniform", "--replicates", "3",
                                      "--no-runtime", "--seed", "4"};
  auto one = base;
  one.insert(one.end(), {"--workers", "1"});
  auto three = base;
  three.insert(three.end(), {"--workers", "3"});
  const auto a = invoke(one);
  const auto b = invoke(three);
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("scenario_id,n,K,lambda,size_mode,detector,replicate"), std::string::npos);
  std::size_t rows = 0;
  std::istringstream lines(a.out);
  for (std::string line; std::getline(lines, line);) rows += line.rfind("n100_", 0) == 0;
  EXPECT_EQ(rows, 9u);
}

TEST_F(CliTest, SimulateJsonlAndSummary) {
  const auto r = invoke({"simulate", "--n", "100", "--k", "5", "--lambda", "50", "--size-modes",
                         "uniform", "--replicates", "2", "--detectors", "oracle", "--format",
                         "jsonl", "--summary", path("summary.json"), "--no-runtime"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(nlohmann::json::parse(line)["command"], "simulate");
  std::size_t records = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) {
      EXPECT_TRUE(nlohmann::json::parse(line).contains("detector"));
      ++records;
    }
  }
  EXPECT_EQ(records, 2u);
  EXPECT_FALSE(slurp(path("summary.json")).empty());
}

TEST_F(CliTest, SimulateRejectsExcludedGrid) {
  EXPECT_EQ(invoke({"simulate", "--n", "100", "--k", "20"}).code, 2);
}

TEST_F(CliTest, ObjectiveStudy) {
  const auto r = invoke({"simulate", "--n", "100", "--k", "5", "--lambda", "25", "--size-modes",
                         "uniform", "--replicates", "2", "--study", "objective"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
}

TEST_F(CliTest, BaselineCompare) {
  auto args = analyze_args();
  args.insert(args.end(), {"--format", "json", "-o", path("report.json")});
  ASSERT_EQ(invoke(args).code, 0);
  const auto r = invoke({"baseline", "-g", data("tiny_edges.tsv"), "--compare",
                         path("report.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc.contains("fit"));
  EXPECT_EQ(doc["degree_table"].size(), 2u);
  EXPECT_TRUE(doc["comparison"].contains("agreement"));
}

TEST_F(CliTest, LeadersTsvAndJson) {
  const std::vector<std::string> base{"leaders",    "-g",   data("tiny_edges.tsv"),
                                      "--partition", data("tiny_partition.csv"),
                                      "--attributes", data("tiny_attributes.csv"),
                                      "--keys",      "party", "--assignment", "1100"};
  const auto tsv = invoke(base);
  ASSERT_EQ(tsv.code, 0) << tsv.err;
  EXPECT_NE(tsv.out.find('\t'), std::string::npos);
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json", "--top", "2"});
  const auto js = invoke(json_args);
  ASSERT_EQ(js.code, 0) << js.err;
  const auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["assignment"], "1100");
  EXPECT_EQ(doc["leaders"].size(), 8u);
  auto bad = base;
  bad.back() = "11";
  EXPECT_NE(invoke(bad).code, 0);
}

TEST_F(CliTest, GenWritesNetworkAndTruth) {
  const auto r = invoke({"gen", "--n", "200", "--k", "6", "--lambda", "50", "--out-dir",
                         path("net"), "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* f : {"edges.tsv", "partition.csv", "truth.csv", "theta.csv", "scenario.json"}) {
    EXPECT_TRUE(fs::exists(dir_ / "net" / f)) << f;
  }
  const auto a = invoke({"analyze", "-g", path("net/edges.tsv"), "--partition",
                         path("net/partition.csv"), "--truth", path("net/truth.csv"), "--format",
                         "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(nlohmann::json::parse(a.out).contains("evaluation"));
}

TEST_F(CliTest, UnknownOptionIsUsageError) {
  EXPECT_EQ(invoke({"analyze", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"simulate", "--detectors", "spectral"}).code, 2);
}

}  // namespace
}  // namespace commcp::cli
