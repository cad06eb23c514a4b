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

#ifndef COMMCP_GENETIC_HPP_
#define COMMCP_GENETIC_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace commcp {

using Genome = std::vector<std::uint8_t>;

// Fitness of a binary genome; larger is better. Must accept genomes that
// violate the class-size constraint (repair scores candidate flips with it).
using FitnessFn = std::function<double(std::span<const std::uint8_t>)>;

struct GeneticOptions {
  std::size_t population_size = 50;
  std::size_t generations = 200;
  double crossover_rate = 0.8;
  // Per-bit flip probability; negative means 1 / genome length.
  double mutation_rate = -1.0;
  std::size_t elitism_count = 2;
  std::size_t stall_generations = 50;
  std::size_t tournament_size = 3;
  // Minimum number of ones and of zeros in every individual.
  std::size_t min_per_class = 2;
  std::uint64_t seed = 0;
};

struct GeneticOutcome {
  Genome best;
  double fitness = 0.0;
  std::uint64_t evaluations = 0;
  std::size_t generations_run = 0;
  // Best-ever fitness after initialization and after each generation.
  std::vector<double> best_trace;
};

// Greedy constraint repair: while fewer than `min_per_class` ones, flip the
// zero bit whose flip yields the highest fitness (lowest index on ties);
// symmetrically for too few zeros. Returns the number of fitness calls.
std::uint64_t repair(Genome& genome, std::size_t min_per_class,
                     const FitnessFn& fitness);

// Generational GA over fixed-length binary strings: tournament selection,
// uniform crossover, per-bit mutation, repair, and elitism. Stops after
// `generations` or after `stall_generations` without a strict improvement
// of the best-ever fitness. `seeds` (repaired, truncated to the population
// size) fill the initial population before random individuals. Fully
// deterministic given options.seed.
GeneticOutcome run_genetic(std::size_t length, const FitnessFn& fitness,
                           const GeneticOptions& options,
                           std::span<const Genome> seeds = {});

}  // namespace commcp

#endif  // COMMCP_GENETIC_HPP_
