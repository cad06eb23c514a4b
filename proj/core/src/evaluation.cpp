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

#include "commcp/evaluation.hpp"

#include <algorithm>
#include <map>

#include "commcp/error.hpp"
#include "commcp/summary_stats.hpp"

namespace commcp {

std::vector<std::uint8_t> expand_to_nodes(const CpAssignment& z, const Partition& p) {
  if (z.size() != p.community_count()) {
    throw InvalidArgument("assignment has " + std::to_string(z.size()) +
                          " entries for " + std::to_string(p.community_count()) +
                          " communities");
  }
  std::vector<std::uint8_t> labels(p.node_count());
  for (NodeId v = 0; v < p.node_count(); ++v) {
    labels[v] = z.is_core(p.community_of(v)) ? 1 : 0;
  }
  return labels;
}

Confusion confusion(std::span<const std::uint8_t> pred,
                    std::span<const std::uint8_t> truth) {
  if (pred.size() != truth.size()) {
    throw InvalidArgument("prediction and truth lengths differ");
  }
  Confusion c;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (truth[i]) {
      (pred[i] ? c.tp : c.fn)++;
    } else {
      (pred[i] ? c.fp : c.tn)++;
    }
  }
  return c;
}

double balanced_accuracy(std::span<const std::uint8_t> pred,
                         std::span<const std::uint8_t> truth) {
  const auto c = confusion(pred, truth);
  if (c.tp + c.fn == 0 || c.tn + c.fp == 0) {
    throw InvalidArgument("balanced accuracy is undefined when the truth has one class");
  }
  const double sensitivity = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  const double specificity = static_cast<double>(c.tn) / static_cast<double>(c.tn + c.fp);
  return (sensitivity + specificity) / 2.0;
}

double f1_score(std::span<const std::uint8_t> pred,
                std::span<const std::uint8_t> truth) {
  const auto c = confusion(pred, truth);
  if (c.tp + c.fn + c.fp == 0) {
    throw InvalidArgument("F1 is undefined without any positive label");
  }
  return 2.0 * static_cast<double>(c.tp) /
         static_cast<double>(2 * c.tp + c.fp + c.fn);
}

std::string_view to_string(DetectorKind kind) {
  switch (kind) {
    case DetectorKind::oracle: return "oracle";
    case DetectorKind::louvain: return "louvain";
    case DetectorKind::external: return "external";
    case DetectorKind::baseline_be: return "be";
  }
  return "oracle";
}

DetectorKind parse_detector_kind(std::string_view text) {
  if (text == "oracle") return DetectorKind::oracle;
  if (text == "louvain") return DetectorKind::louvain;
  if (text == "external") return DetectorKind::external;
  if (text == "be" || text == "baseline") return DetectorKind::baseline_be;
  throw InvalidArgument("unknown detector '" + std::string(text) +
                        "' (expected oracle, louvain, external or be)");
}

namespace {

MetricSummary summarize_metric(std::vector<double> xs) {
  MetricSummary m;
  m.count = xs.size();
  if (xs.empty()) return m;
  std::sort(xs.begin(), xs.end());
  m.mean = stats::mean(xs);
  m.sd = stats::sample_sd(xs);
  m.q1 = stats::quantile_sorted(xs, 0.25);
  m.median = stats::quantile_sorted(xs, 0.5);
  m.q3 = stats::quantile_sorted(xs, 0.75);
  return m;
}

}  // namespace

std::vector<CellSummary> summarize(std::span<const EvalRecord> records) {
  std::vector<CellSummary> cells;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  std::vector<std::vector<double>> ba, f1, ks;
  for (const auto& r : records) {
    const auto key = std::make_pair(r.scenario.id(), r.detector);
    auto [it, inserted] = index.emplace(key, cells.size());
    if (inserted) {
      CellSummary cell;
      cell.scenario_id = key.first;
      cell.detector = key.second;
      cells.push_back(std::move(cell));
      ba.emplace_back();
      f1.emplace_back();
      ks.emplace_back();
    }
    const std::size_t i = it->second;
    ++cells[i].records;
    if (!r.error.empty()) {
      ++cells[i].failures;
      continue;
    }
    if (r.ba) ba[i].push_back(*r.ba);
    if (r.f1) f1[i].push_back(*r.f1);
    ks[i].push_back(static_cast<double>(r.estimated_k));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i].ba = summarize_metric(std::move(ba[i]));
    cells[i].f1 = summarize_metric(std::move(f1[i]));
    cells[i].estimated_k = summarize_metric(std::move(ks[i]));
  }
  return cells;
}

BehaviorStudy objective_behavior_study(const Scenario& base, std::size_t replicates,
                                       const BehaviorOptions& options) {
  if (base.k > options.exhaustive_limit) {
    throw InvalidArgument("objective study enumerates all assignments; K=" +
                          std::to_string(base.k) + " exceeds the limit of " +
                          std::to_string(options.exhaustive_limit));
  }
  admissible_count(base.k);  // throws for K < 4
  BehaviorStudy study;
  for (std::size_t r = 0; r < replicates; ++r) {
    Scenario s = base;
    s.replicate_seed = replicate_seed(options.master_seed, base, r);
    const auto net = generate_network(s);
    const auto& truth = net.truth;
    const ConnectivityMatrix theta = options.use_estimated
                                         ? estimate_connectivity(net.graph, truth.partition)
                                         : truth.theta_gen;
    ObjectiveEvaluator evaluator(theta, options.objective);

    BehaviorReplicate rep;
    rep.z_true = truth.z_true;
    bool have_max = false;
    for_each_admissible(s.k, [&](std::uint64_t mask) {
      const auto z = CpAssignment::from_mask(mask, s.k);
      const double value = evaluator.value(z.bits());
      const bool is_true = z == truth.z_true;
      if (is_true) rep.true_objective = value;
      if (!have_max || value > rep.max_objective ||
          (value == rep.max_objective && z < rep.argmax)) {
        rep.max_objective = value;
        rep.argmax = z;
        have_max = true;
      }
      if (options.keep_rows) {
        const auto labels = expand_to_nodes(z, truth.partition);
        study.rows.push_back(BehaviorRow{r, z, z.core_count(), value,
                                         balanced_accuracy(labels, truth.node_labels),
                                         is_true});
      }
    });
    rep.truth_admissible = truth.z_true.admissible(2);
    rep.truth_is_argmax =
        rep.truth_admissible && rep.true_objective >= rep.max_objective - 1e-12;
    if (rep.truth_is_argmax) rep.argmax = truth.z_true;
    for (std::size_t k = 0; k < s.k; ++k) {
      if (rep.argmax.is_core(k) != truth.z_true.is_core(k)) ++rep.argmax_distance;
    }
    study.replicates.push_back(rep);
  }
  return study;
}

}  // namespace commcp
