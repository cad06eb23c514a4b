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

#include "commcp/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "commcp/error.hpp"
#include "commcp/summary_stats.hpp"

namespace commcp {
namespace {

double phi_coefficient(double pairs, double edges, double pattern, double overlap) {
  const double denom = edges * (pairs - edges) * pattern * (pairs - pattern);
  if (denom <= 0.0) return 0.0;
  return (pairs * overlap - edges * pattern) / std::sqrt(denom);
}

double pair_count(std::size_t n) {
  const double d = static_cast<double>(n);
  return d * (d - 1.0) / 2.0;
}

// Tie-break order: higher correlation, then fewer core nodes, then the core
// with the lowest node ids (lexicographically larger bit vector).
bool better(double value, std::span<const std::uint8_t> z, double best_value,
            std::span<const std::uint8_t> best) {
  if (value > best_value + 1e-12) return true;
  if (value < best_value - 1e-12) return false;
  const auto c1 = std::count(z.begin(), z.end(), 1);
  const auto c2 = std::count(best.begin(), best.end(), 1);
  if (c1 != c2) return c1 < c2;
  return std::lexicographical_compare(best.begin(), best.end(), z.begin(), z.end());
}

std::vector<NodeId> degree_order(const Graph& g) {
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

// Core sizes 1..n-1 along the degree ranking, scored incrementally.
std::vector<Genome> prefix_seeds(const Graph& g) {
  const std::size_t n = g.node_count();
  const double pairs = pair_count(n);
  const double edges = static_cast<double>(g.edge_count());
  const auto order = degree_order(g);
  std::vector<std::uint8_t> in_core(n, 0);
  double periphery_edges = edges;
  std::size_t best_c = 1;
  double best_r = -2.0;
  for (std::size_t c = 1; c < n; ++c) {
    const NodeId v = order[c - 1];
    for (NodeId u : g.neighbors(v)) {
      if (!in_core[u]) periphery_edges -= 1.0;
    }
    in_core[v] = 1;
    const double pattern = pairs - pair_count(n - c);
    const double r = phi_coefficient(pairs, edges, pattern, edges - periphery_edges);
    if (r > best_r + 1e-12) {
      best_r = r;
      best_c = c;
    }
  }
  std::vector<std::size_t> sizes{best_c, best_c - 1, best_c + 1, best_c / 2,
                                 best_c + best_c / 2};
  std::vector<Genome> seeds;
  for (std::size_t c : sizes) {
    if (c < 1 || c >= n) continue;
    Genome z(n, 0);
    for (std::size_t i = 0; i < c; ++i) z[order[i]] = 1;
    if (std::find(seeds.begin(), seeds.end(), z) == seeds.end()) seeds.push_back(z);
  }
  return seeds;
}

}  // namespace

double pattern_correlation(const Graph& g, std::span<const std::uint8_t> core) {
  if (core.size() != g.node_count()) {
    throw InvalidArgument("core vector length does not match node count");
  }
  const std::size_t n = g.node_count();
  const auto c = static_cast<std::size_t>(std::count(core.begin(), core.end(), 1));
  const double pairs = pair_count(n);
  const double edges = static_cast<double>(g.edge_count());
  const double pattern = pairs - pair_count(n - c);
  double periphery_edges = 0.0;
  for (const auto& e : g.edges()) {
    if (!core[e.u] && !core[e.v]) periphery_edges += 1.0;
  }
  return phi_coefficient(pairs, edges, pattern, edges - periphery_edges);
}

NodeCpResult be_fit(const Graph& g, const SearchConfig& cfg) {
  validate(cfg);
  const std::size_t n = g.node_count();
  if (n < 4) throw DataError("node-level core-periphery fit needs at least four nodes");
  if (g.edge_count() == 0) {
    throw DataError("node-level core-periphery fit is undefined on an edgeless graph");
  }
  NodeCpResult result;
  result.settings = cfg;

  if (static_cast<double>(g.edge_count()) == pair_count(n)) {
    result.core.assign(n, 0);
    result.core[0] = 1;
    result.degenerate = true;
    result.mode_used = SearchMode::exhaustive;
    return result;
  }

  const bool exhaustive =
      cfg.mode == SearchMode::exhaustive ||
      (cfg.mode == SearchMode::automatic && n <= cfg.exhaustive_threshold);
  if (exhaustive) {
    if (n > 30) throw InvalidArgument("exhaustive node-level fit supports at most 30 nodes");
    result.mode_used = SearchMode::exhaustive;
    std::vector<std::uint8_t> z(n);
    double best = -2.0;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask + 1 < end; ++mask) {
      for (std::size_t i = 0; i < n; ++i) z[i] = (mask >> i) & 1U;
      const double r = pattern_correlation(g, z);
      ++result.evaluations;
      if (result.core.empty() || better(r, z, best, result.core)) {
        best = r;
        result.core = z;
      }
    }
    result.correlation = best;
    return result;
  }

  result.mode_used = SearchMode::genetic;
  FitnessFn fitness = [&](std::span<const std::uint8_t> z) {
    return pattern_correlation(g, z);
  };
  const auto seeds = prefix_seeds(g);
  const auto outcome = run_genetic(n, fitness, genetic_options(cfg, 1), seeds);
  result.core = outcome.best;
  result.correlation = outcome.fitness;
  result.evaluations = outcome.evaluations;
  return result;
}

std::array<DegreeRow, 2> degree_table(const Graph& g,
                                      std::span<const std::uint8_t> core) {
  if (core.size() != g.node_count()) {
    throw InvalidArgument("core vector length does not match node count");
  }
  std::array<DegreeRow, 2> rows;
  rows[0].cls = "core";
  rows[1].cls = "periphery";
  for (int side = 0; side < 2; ++side) {
    const std::uint8_t want = side == 0 ? 1 : 0;
    std::vector<double> degrees;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (core[v] == want) degrees.push_back(static_cast<double>(g.degree(v)));
    }
    auto& row = rows[side];
    row.count = degrees.size();
    if (degrees.empty()) continue;
    row.mean = stats::mean(degrees);
    if (degrees.size() >= 2) row.sd = stats::sample_sd(degrees);
    row.median = stats::median(degrees);
    const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    row.min = static_cast<std::size_t>(*lo);
    row.max = static_cast<std::size_t>(*hi);
  }
  return rows;
}

}  // namespace commcp
