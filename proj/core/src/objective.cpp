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

#include "commcp/objective.hpp"

#include <algorithm>

#include "commcp/error.hpp"
#include "commcp/summary_stats.hpp"

namespace commcp {
namespace {

struct SideSummary {
  double density = 0.0;
  double center = 0.0;
  double spread = 0.0;
};

// `values` is sorted ascending.
SideSummary summarize(std::span<const double> values, std::size_t pairs,
                      ObjectiveKind kind) {
  SideSummary s;
  if (pairs > 0) {
    s.density = static_cast<double>(values.size()) / static_cast<double>(pairs);
  }
  if (values.empty()) return s;
  if (kind == ObjectiveKind::mean) {
    s.center = stats::mean(values);
    s.spread = stats::sample_sd(values);
  } else {
    s.center = stats::quantile_sorted(values, 0.5);
    s.spread = values.size() < 2 ? 0.0
                                 : stats::quantile_sorted(values, 0.75) -
                                       stats::quantile_sorted(values, 0.25);
  }
  return s;
}

void check(const CpAssignment& z, const ConnectivityMatrix& theta) {
  if (z.size() != theta.size()) {
    throw InvalidArgument("assignment has " + std::to_string(z.size()) +
                          " entries but the matrix has " +
                          std::to_string(theta.size()) + " communities");
  }
  if (!z.admissible(2)) {
    throw InvalidArgument("assignment " + z.to_string() +
                          " is inadmissible: core and periphery need at least "
                          "two communities each");
  }
}

}  // namespace

std::string_view to_string(ObjectiveKind kind) {
  return kind == ObjectiveKind::mean ? "mean" : "median";
}

ObjectiveKind parse_objective_kind(std::string_view text) {
  if (text == "mean") return ObjectiveKind::mean;
  if (text == "median") return ObjectiveKind::median;
  throw InvalidArgument("unknown objective '" + std::string(text) +
                        "' (expected mean or median)");
}

ConnectivitySets build_sets(const CpAssignment& z, const ConnectivityMatrix& theta) {
  check(z, theta);
  ConnectivitySets sets;
  for (std::size_t k = 0; k < z.size(); ++k) {
    for (std::size_t l = k + 1; l < z.size(); ++l) {
      const double x = theta(k, l);
      if (x <= 0.0 || z.is_core(k) != z.is_core(l)) continue;
      (z.is_core(k) ? sets.core : sets.periphery).push_back(x);
    }
  }
  return sets;
}

ObjectiveBreakdown evaluate_objective(const CpAssignment& z,
                                      const ConnectivityMatrix& theta,
                                      ObjectiveKind kind) {
  check(z, theta);
  ObjectiveEvaluator evaluator(theta, kind);
  return evaluator.breakdown(z.bits());
}

ObjectiveEvaluator::ObjectiveEvaluator(const ConnectivityMatrix& theta,
                                       ObjectiveKind kind)
    : k_(theta.size()), kind_(kind), theta_(theta.values()) {
  core_.reserve(k_ * k_ / 2);
  periphery_.reserve(k_ * k_ / 2);
}

ObjectiveBreakdown ObjectiveEvaluator::breakdown(std::span<const std::uint8_t> bits) {
  if (bits.size() != k_) throw InvalidArgument("assignment length does not match K");
  core_.clear();
  periphery_.clear();
  std::size_t n_core = 0;
  for (std::size_t k = 0; k < k_; ++k) {
    n_core += bits[k];
    const double* row = theta_.data() + k * k_;
    for (std::size_t l = k + 1; l < k_; ++l) {
      if (bits[k] != bits[l] || row[l] <= 0.0) continue;
      (bits[k] ? core_ : periphery_).push_back(row[l]);
    }
  }
  const std::size_t n_periphery = k_ - n_core;
  std::sort(core_.begin(), core_.end());
  std::sort(periphery_.begin(), periphery_.end());

  ObjectiveBreakdown b;
  b.kind = kind_;
  b.core_pairs = n_core * (n_core - (n_core > 0 ? 1 : 0)) / 2;
  b.periphery_pairs = n_periphery * (n_periphery - (n_periphery > 0 ? 1 : 0)) / 2;
  b.core_set_size = core_.size();
  b.periphery_set_size = periphery_.size();
  const auto c = summarize(core_, b.core_pairs, kind_);
  const auto p = summarize(periphery_, b.periphery_pairs, kind_);
  b.core_density = c.density;
  b.core_center = c.center;
  b.core_spread = c.spread;
  b.periphery_density = p.density;
  b.periphery_center = p.center;
  b.periphery_spread = p.spread;
  b.value = (c.density + c.center - c.spread) - (p.density + p.center + p.spread);
  return b;
}

}  // namespace commcp
