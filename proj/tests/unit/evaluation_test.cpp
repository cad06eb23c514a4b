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

#include <map>
#include <sstream>

#include "commcp/commcp.hpp"
#include "support/fixtures.hpp"

namespace commcp {
namespace {

using Labels = std::vector<std::uint8_t>;

TEST(ExpandToNodes, InheritsCommunityRole) {
  const auto p = Partition::from_assignment({0, 1, 1, 2, 3, 0});
  const auto labels = expand_to_nodes(CpAssignment::parse("1010"), p);
  EXPECT_EQ(labels, (Labels{1, 0, 0, 1, 0, 1}));
  EXPECT_THROW(expand_to_nodes(CpAssignment::parse("101"), p), InvalidArgument);
}

TEST(BalancedAccuracy, Examples) {
  EXPECT_DOUBLE_EQ(balanced_accuracy(Labels{1, 1, 0, 0}, Labels{1, 0, 0, 0}), (1.0 + 2.0 / 3) / 2);
  EXPECT_DOUBLE_EQ(balanced_accuracy(Labels{1, 0, 1, 0}, Labels{1, 1, 0, 0}), 0.5);
  EXPECT_DOUBLE_EQ(balanced_accuracy(Labels{1, 1, 0, 0}, Labels{1, 1, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(balanced_accuracy(Labels{1, 1, 1, 1}, Labels{1, 1, 0, 0}), 0.5);
  EXPECT_DOUBLE_EQ(balanced_accuracy(Labels{1, 0, 0, 0}, Labels{1, 1, 0, 0}), 0.75);
  EXPECT_THROW(balanced_accuracy(Labels{1, 0}, Labels{1, 1}), InvalidArgument);
  EXPECT_THROW(balanced_accuracy(Labels{1, 0}, Labels{1, 0, 0}), InvalidArgument);
}

TEST(F1Score, Examples) {
  EXPECT_DOUBLE_EQ(f1_score(Labels{1, 1, 0, 0}, Labels{1, 0, 0, 0}), 2.0 / 3);
  EXPECT_DOUBLE_EQ(f1_score(Labels{0, 0, 1, 1}, Labels{1, 1, 0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(f1_score(Labels{0, 0, 0, 0}, Labels{1, 1, 0, 0}), 0.0);
  EXPECT_THROW(f1_score(Labels{0, 0}, Labels{0, 0}), InvalidArgument);
}

TEST(BalancedAccuracy, SwappingBothClassesKeepsValue) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng() % 30;
    Labels pred(n), truth(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred[i] = rng() % 2;
      truth[i] = rng() % 2;
    }
    truth[0] = 1;
    truth[1] = 0;
    Labels pred_c(n), truth_c(n);
    for (std::size_t i = 0; i < n; ++i) {
      pred_c[i] = 1 - pred[i];
      truth_c[i] = 1 - truth[i];
    }
    const double ba = balanced_accuracy(pred, truth);
    EXPECT_NEAR(ba, balanced_accuracy(pred_c, truth_c), 1e-15);
    EXPECT_GE(ba, 0.0);
    EXPECT_LE(ba, 1.0);
  }
}

TEST(DetectorNames, RoundTrip) {
  for (auto kind : {DetectorKind::oracle, DetectorKind::louvain, DetectorKind::external,
                    DetectorKind::baseline_be}) {
    EXPECT_EQ(parse_detector_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_detector_kind("spectral"), InvalidArgument);
}

std::vector<Detector> all_detectors() {
  return {Detector{DetectorKind::oracle, {}}, Detector{DetectorKind::louvain, {}},
          Detector{DetectorKind::baseline_be, {}}};
}

TEST(RunSweep, OneRecordPerDetectorAndReplicate) {
  const std::vector<Scenario> grid{{200, 6, 50, SizeMode::uniform, 0}};
  const auto detectors = all_detectors();
  SweepOptions opts;
  opts.master_seed = 3;
  const auto records = run_sweep(grid, 2, detectors, SearchConfig{}, opts);
  ASSERT_EQ(records.size(), 6u);
  EXPECT_EQ(records[0].detector, "oracle");
  EXPECT_EQ(records[1].detector, "louvain");
  EXPECT_EQ(records[2].detector, "be");
  EXPECT_EQ(records[3].replicate, 1u);
  EXPECT_EQ(records[0].estimated_k, 6u);
  EXPECT_EQ(records[2].estimated_k, 2u);
  EXPECT_TRUE(records[0].ba.has_value());
}

TEST(RunSweep, WorkerCountDoesNotChangeOutput) {
  const auto grid = scenario_grid(GridSpec{{100, 200}, {5}, {50, 75}, {SizeMode::uniform,
                                                                        SizeMode::dirichlet}})
                        .scenarios;
  const auto detectors = all_detectors();
  auto render = [&](std::size_t workers) {
    SweepOptions opts;
    opts.master_seed = 11;
    opts.workers = workers;
    opts.measure_runtime = false;
    std::ostringstream streamed;
    opts.on_record = [&](const EvalRecord& r) { write_record(streamed, r); };
    const auto records = run_sweep(grid, 3, detectors, SearchConfig{}, opts);
    std::ostringstream batch;
    for (const auto& r : records) write_record(batch, r);
    EXPECT_EQ(streamed.str(), batch.str());
    return batch.str();
  };
  const auto one = render(1);
  EXPECT_EQ(one, render(4));
  EXPECT_EQ(one, render(7));
}

TEST(RunSweep, FailuresBecomeNaRecords) {
  // Louvain on tiny networks tends to find fewer than four communities; use
  // an external detector to force it.
  const std::vector<Scenario> grid{{40, 4, 50, SizeMode::uniform, 0}};
  std::vector<Detector> detectors{Detector{
      DetectorKind::external, [](const Scenario&, std::size_t, const Graph& g) {
        std::vector<CommunityId> a(g.node_count(), 0);
        a[0] = 1;
        return Partition::from_assignment(a);
      }}};
  const auto records = run_sweep(grid, 1, detectors, SearchConfig{}, SweepOptions{});
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(records[0].error.empty());
  std::ostringstream out;
  write_record(out, records[0]);
  EXPECT_NE(out.str().find(",NA,NA,NA,"), std::string::npos);
  const auto cells = summarize(records);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].failures, 1u);
  EXPECT_EQ(cells[0].ba.count, 0u);
}

TEST(RunSweep, RejectsEmptyInputs) {
  const std::vector<Scenario> grid{{100, 5, 50, SizeMode::uniform, 0}};
  const auto detectors = all_detectors();
  EXPECT_THROW(run_sweep({}, 1, detectors, SearchConfig{}, SweepOptions{}), InvalidArgument);
  EXPECT_THROW(run_sweep(grid, 0, detectors, SearchConfig{}, SweepOptions{}), InvalidArgument);
  EXPECT_THROW(run_sweep(grid, 1, {}, SearchConfig{}, SweepOptions{}), InvalidArgument);
}

TEST(WriteRecord, HeaderAndRow) {
  std::ostringstream out;
  write_record_header(out);
  EXPECT_EQ(out.str(),
            "scenario_id,n,K,lambda,size_mode,detector,replicate,estimated_K,ba,f1,phi_best,"
            "runtime_ms\n");
  EvalRecord r;
  r.scenario = Scenario{100, 5, 25, SizeMode::dirichlet, 0};
  r.detector = "oracle";
  r.replicate = 3;
  r.estimated_k = 5;
  r.ba = 0.75;
  r.f1 = 0.5;
  r.phi_best = -0.25;
  std::ostringstream row;
  write_record(row, r);
  EXPECT_EQ(row.str(), "n100_K5_l25_dirichlet,100,5,25,dirichlet,oracle,3,5,0.75,0.5,-0.25,0\n");
}

TEST(Summarize, GroupsAndQuartiles) {
  std::vector<EvalRecord> records;
  for (int i = 0; i < 4; ++i) {
    EvalRecord r;
    r.scenario = Scenario{100, 5, 50, SizeMode::uniform, 0};
    r.detector = i % 2 ? "be" : "oracle";
    r.ba = 0.5 + 0.1 * i;
    r.f1 = 0.4;
    r.estimated_k = 5;
    records.push_back(r);
  }
  const auto cells = summarize(records);
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].detector, "oracle");
  EXPECT_EQ(cells[0].records, 2u);
  EXPECT_NEAR(cells[0].ba.mean, 0.6, 1e-12);
  EXPECT_NEAR(cells[0].ba.median, 0.6, 1e-12);
  EXPECT_NEAR(cells[0].ba.q1, 0.55, 1e-12);
  EXPECT_NEAR(cells[1].ba.mean, 0.7, 1e-12);
}

TEST(ObjectiveStudy, PlantedAssignmentScoresPerfectly) {
  BehaviorOptions opts;
  opts.master_seed = 5;
  const auto study = objective_behavior_study(Scenario{500, 6, 50, SizeMode::uniform, 0}, 2, opts);
  ASSERT_EQ(study.replicates.size(), 2u);
  EXPECT_EQ(study.rows.size(), 2 * admissible_count(6));
  for (const auto& row : study.rows) {
    if (row.is_true) {
      EXPECT_DOUBLE_EQ(row.ba, 1.0);
    }
    EXPECT_EQ(row.core_count, row.z.core_count());
  }
}

TEST(ObjectiveStudy, FlipPairsSumToMinusTwiceTheSpread) {
  BehaviorOptions opts;
  opts.master_seed = 6;
  opts.use_estimated = true;
  const Scenario base{300, 6, 50, SizeMode::dirichlet, 0};
  const auto study = objective_behavior_study(base, 1, opts);
  Scenario s = base;
  s.replicate_seed = replicate_seed(6, base, 0);
  const auto net = generate_network(s);
  const auto theta = estimate_connectivity(net.graph, net.truth.partition);
  std::map<std::string, double> by_z;
  for (const auto& row : study.rows) by_z[row.z.to_string()] = row.objective;
  for (const auto& row : study.rows) {
    const auto b = objective_mean(row.z, theta);
    EXPECT_NEAR(row.objective + by_z.at(row.z.complement().to_string()),
                -2 * (b.core_spread + b.periphery_spread), 1e-12);
  }
}

TEST(ObjectiveStudy, DegenerateTruthCannotBeRecovered) {
  BehaviorOptions opts;
  opts.master_seed = 7;
  opts.keep_rows = false;
  for (int lambda : {25, 75}) {
    const auto study =
        objective_behavior_study(Scenario{100, 5, lambda, SizeMode::uniform, 0}, 3, opts);
    EXPECT_TRUE(study.rows.empty());
    for (const auto& rep : study.replicates) {
      EXPECT_FALSE(rep.truth_admissible);
      EXPECT_FALSE(rep.truth_is_argmax);
      EXPECT_NE(rep.argmax, rep.z_true);
      EXPECT_GE(rep.argmax_distance, 1u);
    }
  }
}

TEST(ObjectiveStudy, Limits) {
  EXPECT_THROW(objective_behavior_study(Scenario{1000, 20, 50, SizeMode::uniform, 0}, 1, {}),
               InvalidArgument);
  EXPECT_THROW(objective_behavior_study(Scenario{100, 3, 50, SizeMode::uniform, 0}, 1, {}),
               InfeasibleError);
}

}  // namespace
}  // namespace commcp
