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

#include "commcp/genetic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "commcp/error.hpp"
#include "commcp/rng.hpp"

namespace commcp {
namespace {

std::uint64_t fill_class(Genome& genome, std::uint8_t target, std::size_t needed,
                         const FitnessFn& fitness) {
  std::uint64_t calls = 0;
  auto count = [&] {
    return static_cast<std::size_t>(std::count(genome.begin(), genome.end(), target));
  };
  while (count() < needed) {
    std::size_t best_index = genome.size();
    double best_value = 0.0;
    for (std::size_t i = 0; i < genome.size(); ++i) {
      if (genome[i] == target) continue;
      genome[i] = target;
      const double value = fitness(genome);
      ++calls;
      genome[i] = 1 - target;
      if (best_index == genome.size() || value > best_value) {
        best_index = i;
        best_value = value;
      }
    }
    genome[best_index] = target;
  }
  return calls;
}

}  // namespace

std::uint64_t repair(Genome& genome, std::size_t min_per_class,
                     const FitnessFn& fitness) {
  if (genome.size() < 2 * min_per_class) {
    throw InvalidArgument("genome too short for the class-size constraint");
  }
  return fill_class(genome, 1, min_per_class, fitness) +
         fill_class(genome, 0, min_per_class, fitness);
}

GeneticOutcome run_genetic(std::size_t length, const FitnessFn& fitness,
                           const GeneticOptions& options,
                           std::span<const Genome> seeds) {
  if (options.population_size < 4) throw InvalidArgument("population_size must be >= 4");
  if (options.elitism_count >= options.population_size) {
    throw InvalidArgument("elitism_count must be smaller than population_size");
  }
  if (options.crossover_rate < 0.0 || options.crossover_rate > 1.0 ||
      options.mutation_rate > 1.0) {
    throw InvalidArgument("GA rates must lie in [0, 1]");
  }
  if (options.tournament_size < 1) throw InvalidArgument("tournament_size must be >= 1");
  if (length < 2 * options.min_per_class) {
    throw InvalidArgument("genome too short for the class-size constraint");
  }

  const double mutation = options.mutation_rate < 0.0
                              ? 1.0 / static_cast<double>(length)
                              : options.mutation_rate;
  const std::size_t pop_size = options.population_size;
  Rng rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, pop_size - 1);

  GeneticOutcome out;
  std::vector<Genome> population;
  std::vector<double> scores;
  population.reserve(pop_size);

  auto admit = [&](Genome g) {
    out.evaluations += repair(g, options.min_per_class, fitness);
    scores.push_back(fitness(g));
    ++out.evaluations;
    population.push_back(std::move(g));
  };

  for (const auto& s : seeds) {
    if (population.size() == pop_size) break;
    if (s.size() != length) throw InvalidArgument("seed genome has the wrong length");
    admit(s);
  }
  while (population.size() < pop_size) {
    Genome g(length);
    for (auto& bit : g) bit = unit(rng) < 0.5 ? 1 : 0;
    admit(std::move(g));
  }

  auto best_of = [&] {
    std::size_t b = 0;
    for (std::size_t i = 1; i < pop_size; ++i) {
      if (scores[i] > scores[b]) b = i;
    }
    return b;
  };
  {
    const std::size_t b = best_of();
    out.best = population[b];
    out.fitness = scores[b];
    out.best_trace.push_back(out.fitness);
  }

  auto tournament = [&]() -> const Genome& {
    std::size_t winner = pick(rng);
    for (std::size_t t = 1; t < options.tournament_size; ++t) {
      const std::size_t challenger = pick(rng);
      if (scores[challenger] > scores[winner]) winner = challenger;
    }
    return population[winner];
  };

  std::size_t stall = 0;
  std::vector<std::size_t> order(pop_size);
  for (std::size_t gen = 0; gen < options.generations; ++gen) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::vector<Genome> next;
    std::vector<double> next_scores;
    next.reserve(pop_size);
    for (std::size_t e = 0; e < options.elitism_count; ++e) {
      next.push_back(population[order[e]]);
      next_scores.push_back(scores[order[e]]);
    }
    std::vector<Genome> children;
    while (next.size() + children.size() < pop_size) {
      Genome a = tournament();
      Genome b = tournament();
      if (unit(rng) < options.crossover_rate) {
        for (std::size_t i = 0; i < length; ++i) {
          if (unit(rng) < 0.5) std::swap(a[i], b[i]);
        }
      }
      for (Genome* child : {&a, &b}) {
        for (auto& bit : *child) {
          if (unit(rng) < mutation) bit ^= 1;
        }
      }
      children.push_back(std::move(a));
      if (next.size() + children.size() < pop_size) children.push_back(std::move(b));
    }
    population = std::move(next);
    scores = std::move(next_scores);
    for (auto& child : children) admit(std::move(child));

    ++out.generations_run;
    const std::size_t b = best_of();
    if (scores[b] > out.fitness) {
      out.fitness = scores[b];
      out.best = population[b];
      stall = 0;
    } else {
      ++stall;
    }
    out.best_trace.push_back(out.fitness);
    if (options.stall_generations > 0 && stall >= options.stall_generations) break;
  }
  return out;
}

}  // namespace commcp
