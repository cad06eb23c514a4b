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

#ifndef COMMCP_SEARCH_HPP_
#define COMMCP_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "commcp/assignment.hpp"
#include "commcp/connectivity.hpp"
#include "commcp/genetic.hpp"
#include "commcp/objective.hpp"

namespace commcp {

enum class SearchMode { automatic, exhaustive, genetic };

std::string_view to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);

struct SearchConfig {
  ObjectiveKind objective = ObjectiveKind::mean;
  SearchMode mode = SearchMode::automatic;
  // Automatic mode enumerates exhaustively up to this many communities.
  std::size_t exhaustive_threshold = 15;
  std::size_t population_size = 50;
  std::size_t generations = 200;
  double crossover_rate = 0.8;
  // Negative means 1 / K.
  double mutation_rate = -1.0;
  std::size_t elitism_count = 2;
  std::size_t stall_generations = 50;
  std::uint64_t seed = 0;
};

// Throws InvalidArgument when a field is out of range.
void validate(const SearchConfig& cfg);

GeneticOptions genetic_options(const SearchConfig& cfg, std::size_t min_per_class);

struct SearchResult {
  CpAssignment best;
  double objective = 0.0;
  ObjectiveBreakdown breakdown;
  // Every assignment within 1e-12 of the optimum, ascending; exhaustive
  // mode only (holds just `best` after a genetic run).
  std::vector<CpAssignment> ties;
  std::uint64_t evaluations = 0;
  SearchMode mode_used = SearchMode::exhaustive;
  // Best-ever objective per generation (genetic mode).
  std::vector<double> best_trace;
};

// 2^K - 2 - 2K. Throws InfeasibleError for K < 4.
std::uint64_t admissible_count(std::size_t k);

// Calls `visit` with the bit mask of every assignment with 2 <= core count
// <= K - 2, in increasing mask order. Requires 4 <= K <= 63.
void for_each_admissible(std::size_t k,
                         const std::function<void(std::uint64_t)>& visit);

std::vector<CpAssignment> enumerate_admissible(std::size_t k);

// Global argmax over all admissible assignments. `best` is the
// lexicographically smallest co-optimal assignment.
SearchResult exhaustive_search(const ConnectivityMatrix& theta, const SearchConfig& cfg);

// GA over community bit strings with repair to >= 2 per side. When every
// admissible assignment fits in the initial population they are all seeded.
SearchResult genetic_search(const ConnectivityMatrix& theta, const SearchConfig& cfg);

// Dispatches on cfg.mode; automatic picks exhaustive for K <= threshold.
SearchResult search(const ConnectivityMatrix& theta, const SearchConfig& cfg);

}  // namespace commcp

#endif  // COMMCP_SEARCH_HPP_
