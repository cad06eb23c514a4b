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


#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "commcp/commcp.hpp"

namespace commcp {
namespace {

ConnectivityMatrix random_theta(std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<> unit(0.0, 1.0);
  std::vector<double> m(k * k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const double v = unit(rng) < 0.3 ? 0.0 : unit(rng);
      m[a * k + b] = m[b * k + a] = v;
    }
  }
  return connectivity_from_matrix(m, k);
}

const GeneratedNetwork& network(std::size_t n) {
  static std::map<std::size_t, GeneratedNetwork> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, generate_network(Scenario{n, 10, 50, SizeMode::uniform, 1})).first;
  }
  return it->second;
}

void BM_Objective(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto theta = random_theta(k, 1);
  ObjectiveEvaluator eval(theta, ObjectiveKind::mean);
  const auto z = CpAssignment::from_mask((std::uint64_t{1} << (k / 2)) - 1, k);
  for (auto _ : state) benchmark::DoNotOptimize(eval.value(z.bits()));
}
BENCHMARK(BM_Objective)->Arg(10)->Arg(20)->Arg(40);

void BM_ExhaustiveSearch(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto theta = random_theta(k, 2);
  SearchConfig cfg;
  cfg.mode = SearchMode::exhaustive;
  for (auto _ : state) benchmark::DoNotOptimize(search(theta, cfg).objective);
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_GeneticSearch(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto theta = random_theta(k, 3);
  SearchConfig cfg;
  cfg.mode = SearchMode::genetic;
  for (auto _ : state) benchmark::DoNotOptimize(search(theta, cfg).objective);
}
BENCHMARK(BM_GeneticSearch)->Arg(12)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Betweenness(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(g));
}
BENCHMARK(BM_Betweenness)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Louvain(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(louvain_partition(g, 7).community_count());
}
BENCHMARK(BM_Louvain)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        generate_network(Scenario{n, 10, 50, SizeMode::uniform, seed++}).graph.edge_count());
  }
}
BENCHMARK(BM_Generate)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_NodeBaseline(benchmark::State& state) {
  const auto& g = network(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(be_fit(g, SearchConfig{}).correlation);
}
BENCHMARK(BM_NodeBaseline)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace commcp

BENCHMARK_MAIN();
