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

#ifndef COMMCP_EVALUATION_HPP_
#define COMMCP_EVALUATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commcp/assignment.hpp"
#include "commcp/partition.hpp"
#include "commcp/search.hpp"
#include "commcp/simgen.hpp"

namespace commcp {

// Each node inherits its community's role. Throws InvalidArgument on a
// length mismatch.
std::vector<std::uint8_t> expand_to_nodes(const CpAssignment& z, const Partition& p);

struct Confusion {
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
};

// Core is the positive class. Throws InvalidArgument on unequal lengths.
Confusion confusion(std::span<const std::uint8_t> pred,
                    std::span<const std::uint8_t> truth);

// (sensitivity + specificity) / 2. Throws InvalidArgument when `truth` holds
// a single class.
double balanced_accuracy(std::span<const std::uint8_t> pred,
                         std::span<const std::uint8_t> truth);

// F1 on the core class; 0 when positives exist but none is predicted
// correctly. Throws InvalidArgument when neither vector has a positive.
double f1_score(std::span<const std::uint8_t> pred,
                std::span<const std::uint8_t> truth);

enum class DetectorKind {
  oracle,       // planted partition
  louvain,      // built-in modularity detector
  external,     // partition supplied by a callback (e.g. files on disk)
  baseline_be,  // node-level baseline, no partition
};

std::string_view to_string(DetectorKind kind);
DetectorKind parse_detector_kind(std::string_view text);

using ExternalPartitionFn =
    std::function<Partition(const Scenario&, std::size_t replicate, const Graph&)>;

struct Detector {
  DetectorKind kind = DetectorKind::oracle;
  ExternalPartitionFn external;  // required for DetectorKind::external
};

struct EvalRecord {
  Scenario scenario;
  std::size_t replicate = 0;
  std::string detector;
  std::size_t estimated_k = 0;
  std::optional<double> ba;
  std::optional<double> f1;
  std::optional<double> phi_best;
  CpAssignment z_detected;  // empty for the node-level baseline
  std::int64_t runtime_ms = 0;
  std::string error;  // non-empty when this replicate failed
};

struct SweepOptions {
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  // When false runtime_ms is written as 0, making output byte-stable.
  bool measure_runtime = true;
  // Called in (scenario, replicate, detector) order as soon as every earlier
  // record is available. Invoked from worker threads under a lock.
  std::function<void(const EvalRecord&)> on_record;
};

// Per replicate: generate the network, obtain a partition per detector,
// estimate connectivity, search, expand to nodes, and score against the
// planted node labels. Search, Louvain and baseline seeds derive from the
// replicate seed, so results do not depend on the worker count. Failures
// (e.g. fewer than four detected communities) become records with `error`
// set. Returns records in emission order.
std::vector<EvalRecord> run_sweep(std::span<const Scenario> grid, std::size_t replicates,
                                  std::span<const Detector> detectors,
                                  const SearchConfig& cfg, const SweepOptions& options);

// scenario_id,n,K,lambda,size_mode,detector,replicate,estimated_K,ba,f1,phi_best,runtime_ms
void write_record_header(std::ostream& out);
// Missing metrics are written as NA; doubles use round-trip precision.
void write_record(std::ostream& out, const EvalRecord& r);

struct MetricSummary {
  std::size_t count = 0;
  double mean = 0.0, sd = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0;
};

struct CellSummary {
  std::string scenario_id;
  std::string detector;
  std::size_t records = 0;
  std::size_t failures = 0;
  MetricSummary ba;
  MetricSummary f1;
  MetricSummary estimated_k;
};

// Grouped by (scenario, detector) in first-appearance order.
std::vector<CellSummary> summarize(std::span<const EvalRecord> records);

struct BehaviorRow {
  std::size_t replicate = 0;
  CpAssignment z;
  std::size_t core_count = 0;
  double objective = 0.0;
  double ba = 0.0;
  bool is_true = false;
};

struct BehaviorReplicate {
  CpAssignment z_true;
  CpAssignment argmax;
  double true_objective = 0.0;
  double max_objective = 0.0;
  bool truth_admissible = true;
  // The planted assignment scores within 1e-12 of the maximum; argmax is
  // then reported as the planted assignment itself.
  bool truth_is_argmax = false;
  // Number of communities on which argmax and truth disagree.
  std::size_t argmax_distance = 0;
};

struct BehaviorStudy {
  std::vector<BehaviorRow> rows;
  std::vector<BehaviorReplicate> replicates;
};

struct BehaviorOptions {
  ObjectiveKind objective = ObjectiveKind::mean;
  // Score against the estimated matrix instead of the generating one.
  bool use_estimated = false;
  std::size_t exhaustive_limit = 15;
  std::uint64_t master_seed = 0;
  bool keep_rows = true;
};

// Scores every admissible assignment of each replicate and its node-level BA
// against the planted labels. Throws InvalidArgument above the limit and
// InfeasibleError for K < 4.
BehaviorStudy objective_behavior_study(const Scenario& base, std::size_t replicates,
                                       const BehaviorOptions& options);

}  // namespace commcp

#endif  // COMMCP_EVALUATION_HPP_
