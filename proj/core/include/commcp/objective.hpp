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

#ifndef COMMCP_OBJECTIVE_HPP_
#define COMMCP_OBJECTIVE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commcp/assignment.hpp"
#include "commcp/connectivity.hpp"

namespace commcp {

// Scoring of a community-level core/periphery split.
//
// For an assignment z, the core set holds every strictly positive
// theta(k,l), k < l, with both communities in the core; the periphery set is
// the same for periphery-periphery pairs. Core-periphery entries enter
// neither. For each side:
//
//   density = |set| / (number of same-side community pairs)
//   center  = mean (or median) of the set
//   spread  = sample sd (or type-7 IQR) of the set
//
// and the score is
//
//   (core density + core center - core spread)
//       - (periphery density + periphery center + periphery spread).
//
// An empty set has center and spread 0; a single-element set has spread 0.
// A side with fewer than two communities has no pairs and density 0 (only
// reachable through the relaxed evaluator used for GA repair).
enum class ObjectiveKind { mean, median };

std::string_view to_string(ObjectiveKind kind);
ObjectiveKind parse_objective_kind(std::string_view text);

struct ObjectiveBreakdown {
  ObjectiveKind kind = ObjectiveKind::mean;
  double core_density = 0.0;
  double core_center = 0.0;
  double core_spread = 0.0;
  double periphery_density = 0.0;
  double periphery_center = 0.0;
  double periphery_spread = 0.0;
  double value = 0.0;
  std::size_t core_set_size = 0;
  std::size_t periphery_set_size = 0;
  std::size_t core_pairs = 0;
  std::size_t periphery_pairs = 0;
};

struct ConnectivitySets {
  std::vector<double> core;
  std::vector<double> periphery;
};

// Nonzero same-side entries, in (k, l) row-major order. Throws
// InvalidArgument on a length mismatch or an inadmissible z.
ConnectivitySets build_sets(const CpAssignment& z, const ConnectivityMatrix& theta);

// Throws InvalidArgument on a length mismatch or an inadmissible z.
ObjectiveBreakdown evaluate_objective(const CpAssignment& z,
                                      const ConnectivityMatrix& theta,
                                      ObjectiveKind kind = ObjectiveKind::mean);

inline ObjectiveBreakdown objective_mean(const CpAssignment& z,
                                         const ConnectivityMatrix& theta) {
  return evaluate_objective(z, theta, ObjectiveKind::mean);
}

inline ObjectiveBreakdown objective_median(const CpAssignment& z,
                                           const ConnectivityMatrix& theta) {
  return evaluate_objective(z, theta, ObjectiveKind::median);
}

// Reusable scorer for search loops. Accepts any binary vector of length K,
// admissible or not, and keeps scratch buffers, so one instance must not be
// shared between threads. Set entries are sorted before summation, which
// makes scores exactly invariant under community relabelling.
class ObjectiveEvaluator {
 public:
  ObjectiveEvaluator(const ConnectivityMatrix& theta, ObjectiveKind kind);

  std::size_t community_count() const { return k_; }
  ObjectiveKind kind() const { return kind_; }

  ObjectiveBreakdown breakdown(std::span<const std::uint8_t> bits);
  double value(std::span<const std::uint8_t> bits) { return breakdown(bits).value; }

 private:
  std::size_t k_;
  ObjectiveKind kind_;
  std::vector<double> theta_;
  std::vector<double> core_;
  std::vector<double> periphery_;
};

}  // namespace commcp

#endif  // COMMCP_OBJECTIVE_HPP_
