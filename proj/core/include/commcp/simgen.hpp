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

#ifndef COMMCP_SIMGEN_HPP_
#define COMMCP_SIMGEN_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "commcp/assignment.hpp"
#include "commcp/connectivity.hpp"
#include "commcp/graph.hpp"
#include "commcp/partition.hpp"
#include "commcp/rng.hpp"

namespace commcp {

// Planted community + community-level core-periphery SBM benchmarks.
//
// Communities draw proportions tau (uniform 1/K, or symmetric Dirichlet(1)),
// nodes draw communities i.i.d. from tau, and the first round(K * lambda /
// 100) communities of a seeded shuffle are core. Every node pair then gets an
// independent edge with probability c * ln(n) / n, where c is
//
//   8       within a community
//   1       core-core
//   1/8     core-periphery
//   1/40    periphery-periphery

enum class SizeMode { uniform, dirichlet };

std::string_view to_string(SizeMode mode);
SizeMode parse_size_mode(std::string_view text);

struct Scenario {
  std::size_t n = 0;
  std::size_t k = 0;
  int lambda_pct = 50;
  SizeMode size_mode = SizeMode::uniform;
  std::uint64_t replicate_seed = 0;

  // Throws InvalidArgument unless n >= 2K, K >= 2 and 0 < lambda < 100.
  void validate() const;
  // round(K * lambda / 100), halves rounded up.
  std::size_t core_count() const;
  // Stable identifier independent of the seed, e.g. "n500_K10_l50_uniform".
  std::string id() const;
};

struct GroundTruth {
  Partition partition;
  CpAssignment z_true;
  // Generating inter-community probabilities (zero diagonal).
  ConnectivityMatrix theta_gen;
  std::vector<std::uint8_t> node_labels;
  std::vector<double> proportions;
  std::size_t size_attempts = 0;
};

struct GeneratedNetwork {
  Graph graph;
  GroundTruth truth;
};

struct SizeSample {
  std::vector<double> proportions;
  std::vector<CommunityId> assignment;
  std::size_t attempts = 0;
};

// Draws proportions and node memberships, redrawing both until every
// community has at least two nodes. Throws InvalidArgument for n < 2K and
// InfeasibleError after `retry_cap` failed draws.
SizeSample sample_sizes(std::size_t k, std::size_t n, SizeMode mode, Rng& rng,
                        std::size_t retry_cap = 1000);

enum class PairKind { within, core_core, core_periphery, periphery_periphery };

// Natural-log scaling, clamped to [0, 1]. Requires n >= 2.
double edge_probability(PairKind kind, std::size_t n);

// Deterministic in the scenario (including replicate_seed).
GeneratedNetwork generate_network(const Scenario& s);

struct GridSpec {
  std::vector<std::size_t> n;
  std::vector<std::size_t> k;
  std::vector<int> lambda_pct;
  std::vector<SizeMode> size_modes;

  // n = {100, 200, 500, 1000}, K = {5, 10, 15, 20}, lambda = {25, 50, 75},
  // both size modes.
  static GridSpec full_design();
};

struct GridExpansion {
  std::vector<Scenario> scenarios;
  std::size_t excluded = 0;
  std::vector<std::string> warnings;
};

// Cartesian product in (n, K, lambda, mode) order, dropping small networks
// (n < 500) with K >= 20 and large networks (n >= 500) with K <= 5.
// Combinations violating Scenario::validate are dropped with a warning.
// Throws InvalidArgument when nothing remains.
GridExpansion scenario_grid(const GridSpec& spec);

// Seed for replicate r of a scenario: derive_seed(master, hash(id), r).
std::uint64_t replicate_seed(std::uint64_t master, const Scenario& s,
                             std::size_t replicate);

}  // namespace commcp

#endif  // COMMCP_SIMGEN_HPP_
