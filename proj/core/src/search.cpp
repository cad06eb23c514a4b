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

#include "commcp/search.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "commcp/error.hpp"

namespace commcp {
namespace {

constexpr double kTieTolerance = 1e-12;

void require_four(std::size_t k) {
  if (k < 4) {
    throw InfeasibleError(
        "core-periphery partition requires at least four communities, got " +
        std::to_string(k));
  }
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::automatic: return "auto";
    case SearchMode::exhaustive: return "exhaustive";
    case SearchMode::genetic: return "genetic";
  }
  return "auto";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "auto") return SearchMode::automatic;
  if (text == "exhaustive") return SearchMode::exhaustive;
  if (text == "genetic") return SearchMode::genetic;
  throw InvalidArgument("unknown search mode '" + std::string(text) +
                        "' (expected auto, exhaustive or genetic)");
}

void validate(const SearchConfig& cfg) {
  if (cfg.population_size < 4) throw InvalidArgument("population_size must be >= 4");
  if (cfg.elitism_count >= cfg.population_size) {
    throw InvalidArgument("elitism_count must be smaller than population_size");
  }
  if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0) {
    throw InvalidArgument("crossover_rate must lie in [0, 1]");
  }
  if (cfg.mutation_rate > 1.0) throw InvalidArgument("mutation_rate must lie in [0, 1]");
}

GeneticOptions genetic_options(const SearchConfig& cfg, std::size_t min_per_class) {
  GeneticOptions o;
  o.population_size = cfg.population_size;
  o.generations = cfg.generations;
  o.crossover_rate = cfg.crossover_rate;
  o.mutation_rate = cfg.mutation_rate;
  o.elitism_count = cfg.elitism_count;
  o.stall_generations = cfg.stall_generations;
  o.min_per_class = min_per_class;
  o.seed = cfg.seed;
  return o;
}

std::uint64_t admissible_count(std::size_t k) {
  require_four(k);
  if (k > 63) throw InvalidArgument("admissible_count supports K <= 63");
  return (std::uint64_t{1} << k) - 2 - 2 * static_cast<std::uint64_t>(k);
}

void for_each_admissible(std::size_t k,
                         const std::function<void(std::uint64_t)>& visit) {
  require_four(k);
  if (k > 63) throw InvalidArgument("enumeration supports K <= 63");
  const std::uint64_t end = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const auto ones = static_cast<std::size_t>(std::popcount(mask));
    if (ones >= 2 && ones + 2 <= k) visit(mask);
  }
}

std::vector<CpAssignment> enumerate_admissible(std::size_t k) {
  std::vector<CpAssignment> out;
  out.reserve(admissible_count(k));
  for_each_admissible(k, [&](std::uint64_t m) { out.push_back(CpAssignment::from_mask(m, k)); });
  return out;
}

SearchResult exhaustive_search(const ConnectivityMatrix& theta, const SearchConfig& cfg) {
  validate(cfg);
  const std::size_t k = theta.size();
  require_four(k);
  ObjectiveEvaluator evaluator(theta, cfg.objective);
  SearchResult result;
  result.mode_used = SearchMode::exhaustive;

  double best = 0.0;
  bool have_best = false;
  std::vector<std::pair<std::uint64_t, double>> candidates;
  std::vector<std::uint8_t> bits(k);
  for_each_admissible(k, [&](std::uint64_t mask) {
    for (std::size_t i = 0; i < k; ++i) bits[i] = (mask >> i) & 1U;
    const double value = evaluator.value(bits);
    ++result.evaluations;
    if (!have_best || value > best + kTieTolerance) {
      candidates.clear();
      candidates.emplace_back(mask, value);
      best = value;
      have_best = true;
      return;
    }
    if (value < best - kTieTolerance) return;
    candidates.emplace_back(mask, value);
    if (value > best) {
      best = value;
      std::erase_if(candidates,
                    [&](const auto& c) { return c.second < best - kTieTolerance; });
    }
  });

  for (const auto& [mask, value] : candidates) {
    result.ties.push_back(CpAssignment::from_mask(mask, k));
  }
  std::sort(result.ties.begin(), result.ties.end());
  result.best = result.ties.front();
  result.breakdown = evaluator.breakdown(result.best.bits());
  result.objective = result.breakdown.value;
  return result;
}

SearchResult genetic_search(const ConnectivityMatrix& theta, const SearchConfig& cfg) {
  validate(cfg);
  const std::size_t k = theta.size();
  require_four(k);
  ObjectiveEvaluator evaluator(theta, cfg.objective);
  SearchResult result;
  result.mode_used = SearchMode::genetic;

  // Small search spaces revisit the same strings constantly; memoize by mask.
  std::unordered_map<std::uint64_t, double> cache;
  std::uint64_t computed = 0;
  FitnessFn fitness = [&](std::span<const std::uint8_t> bits) {
    if (k > 64) {
      ++computed;
      return evaluator.value(bits);
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < k; ++i) mask |= std::uint64_t{bits[i]} << i;
    auto [it, inserted] = cache.try_emplace(mask, 0.0);
    if (inserted) {
      it->second = evaluator.value(bits);
      ++computed;
    }
    return it->second;
  };

  std::vector<Genome> seeds;
  if (k <= 63 && admissible_count(k) <= cfg.population_size) {
    for_each_admissible(k, [&](std::uint64_t mask) {
      Genome g(k);
      for (std::size_t i = 0; i < k; ++i) g[i] = (mask >> i) & 1U;
      seeds.push_back(std::move(g));
    });
  }
  const auto outcome = run_genetic(k, fitness, genetic_options(cfg, 2), seeds);
  result.best = CpAssignment(outcome.best);
  result.breakdown = evaluator.breakdown(outcome.best);
  result.objective = result.breakdown.value;
  result.ties = {result.best};
  result.evaluations = computed;
  result.best_trace = outcome.best_trace;
  return result;
}

SearchResult search(const ConnectivityMatrix& theta, const SearchConfig& cfg) {
  switch (cfg.mode) {
    case SearchMode::exhaustive: return exhaustive_search(theta, cfg);
    case SearchMode::genetic: return genetic_search(theta, cfg);
    case SearchMode::automatic:
      return theta.size() <= cfg.exhaustive_threshold ? exhaustive_search(theta, cfg)
                                                      : genetic_search(theta, cfg);
  }
  return exhaustive_search(theta, cfg);
}

}  // namespace commcp
