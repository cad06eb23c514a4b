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

#include "commcp/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "commcp/error.hpp"

namespace commcp {

std::string_view to_string(SizeMode mode) {
  return mode == SizeMode::uniform ? "uniform" : "dirichlet";
}

SizeMode parse_size_mode(std::string_view text) {
  if (text == "uniform") return SizeMode::uniform;
  if (text == "dirichlet") return SizeMode::dirichlet;
  throw InvalidArgument("unknown size mode '" + std::string(text) +
                        "' (expected uniform or dirichlet)");
}

void Scenario::validate() const {
  if (k < 2) throw InvalidArgument("scenario needs K >= 2");
  if (n < 2 * k) {
    throw InvalidArgument("scenario needs n >= 2K (n=" + std::to_string(n) +
                          ", K=" + std::to_string(k) + ")");
  }
  if (lambda_pct <= 0 || lambda_pct >= 100) {
    throw InvalidArgument("lambda must lie strictly between 0 and 100");
  }
}

std::size_t Scenario::core_count() const {
  return (k * static_cast<std::size_t>(lambda_pct) + 50) / 100;
}

std::string Scenario::id() const {
  return "n" + std::to_string(n) + "_K" + std::to_string(k) + "_l" +
         std::to_string(lambda_pct) + "_" + std::string(to_string(size_mode));
}

SizeSample sample_sizes(std::size_t k, std::size_t n, SizeMode mode, Rng& rng,
                        std::size_t retry_cap) {
  if (k == 0) throw InvalidArgument("need at least one community");
  if (n < 2 * k) {
    throw InvalidArgument("cannot place two nodes in each of " + std::to_string(k) +
                          " communities with only " + std::to_string(n) + " nodes");
  }
  SizeSample sample;
  std::vector<std::size_t> counts(k);
  std::exponential_distribution<double> unit_exp(1.0);
  for (sample.attempts = 1; sample.attempts <= retry_cap; ++sample.attempts) {
    sample.proportions.assign(k, 1.0 / static_cast<double>(k));
    if (mode == SizeMode::dirichlet) {
      double total = 0.0;
      for (auto& t : sample.proportions) {
        t = unit_exp(rng);
        total += t;
      }
      for (auto& t : sample.proportions) t /= total;
    }
    std::discrete_distribution<CommunityId> categorical(sample.proportions.begin(),
                                                        sample.proportions.end());
    sample.assignment.resize(n);
    std::fill(counts.begin(), counts.end(), 0);
    for (auto& c : sample.assignment) {
      c = categorical(rng);
      ++counts[c];
    }
    if (*std::min_element(counts.begin(), counts.end()) >= 2) return sample;
  }
  throw InfeasibleError("could not draw community sizes with at least two nodes "
                        "each after " + std::to_string(retry_cap) + " attempts");
}

double edge_probability(PairKind kind, std::size_t n) {
  if (n < 2) throw InvalidArgument("edge_probability needs n >= 2");
  const double base = std::log(static_cast<double>(n)) / static_cast<double>(n);
  double scale = 1.0;
  switch (kind) {
    case PairKind::within: scale = 8.0; break;
    case PairKind::core_core: scale = 1.0; break;
    case PairKind::core_periphery: scale = 1.0 / 8.0; break;
    case PairKind::periphery_periphery: scale = 1.0 / 40.0; break;
  }
  return std::clamp(scale * base, 0.0, 1.0);
}

GeneratedNetwork generate_network(const Scenario& s) {
  s.validate();
  Rng rng(s.replicate_seed);
  auto sizes = sample_sizes(s.k, s.n, s.size_mode, rng);

  std::vector<std::size_t> order(s.k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::uint8_t> core(s.k, 0);
  for (std::size_t i = 0; i < s.core_count(); ++i) core[order[i]] = 1;

  std::vector<double> prob(s.k * s.k);
  std::vector<double> theta(s.k * s.k, 0.0);
  for (std::size_t a = 0; a < s.k; ++a) {
    for (std::size_t b = 0; b < s.k; ++b) {
      PairKind kind = PairKind::within;
      if (a != b) {
        kind = core[a] && core[b]   ? PairKind::core_core
               : core[a] || core[b] ? PairKind::core_periphery
                                    : PairKind::periphery_periphery;
      }
      prob[a * s.k + b] = edge_probability(kind, s.n);
      if (a != b) theta[a * s.k + b] = prob[a * s.k + b];
    }
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  const auto& member = sizes.assignment;
  for (std::size_t i = 0; i < s.n; ++i) {
    const double* row = prob.data() + member[i] * s.k;
    for (std::size_t j = i + 1; j < s.n; ++j) {
      if (unit(rng) < row[member[j]]) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
      }
    }
  }

  GeneratedNetwork net;
  net.graph = Graph(s.n, std::move(edges));
  net.truth.partition = Partition::from_assignment(sizes.assignment);
  net.truth.z_true = CpAssignment(core);
  net.truth.theta_gen = connectivity_from_matrix(theta, s.k);
  net.truth.node_labels.resize(s.n);
  for (std::size_t v = 0; v < s.n; ++v) net.truth.node_labels[v] = core[member[v]];
  net.truth.proportions = std::move(sizes.proportions);
  net.truth.size_attempts = sizes.attempts;
  return net;
}

GridSpec GridSpec::full_design() {
  return GridSpec{{100, 200, 500, 1000},
                  {5, 10, 15, 20},
                  {25, 50, 75},
                  {SizeMode::uniform, SizeMode::dirichlet}};
}

GridExpansion scenario_grid(const GridSpec& spec) {
  GridExpansion out;
  for (std::size_t n : spec.n) {
    for (std::size_t k : spec.k) {
      for (int lambda : spec.lambda_pct) {
        for (SizeMode mode : spec.size_modes) {
          const bool small_with_many = n < 500 && k >= 20;
          const bool large_with_few = n >= 500 && k <= 5;
          if (small_with_many || large_with_few) {
            ++out.excluded;
            continue;
          }
          Scenario s{n, k, lambda, mode, 0};
          try {
            s.validate();
          } catch (const InvalidArgument& e) {
            ++out.excluded;
            out.warnings.push_back("skipping " + s.id() + ": " + e.what());
            continue;
          }
          out.scenarios.push_back(s);
        }
      }
    }
  }
  if (out.scenarios.empty()) throw InvalidArgument("scenario grid is empty");
  const auto full = GridSpec::full_design();
  if (spec.n == full.n && spec.lambda_pct == full.lambda_pct &&
      spec.size_modes == full.size_modes &&
      (spec.k == full.k || spec.k == std::vector<std::size_t>{5, 10, 15})) {
    const std::size_t product =
        spec.n.size() * spec.k.size() * spec.lambda_pct.size() * spec.size_modes.size();
    out.warnings.push_back("full design yields " + std::to_string(out.scenarios.size()) +
                           " scenarios after exclusions (" + std::to_string(product) +
                           " before); a total of 96 distinct scenarios is not reachable "
                           "once the exclusion rule is applied");
  }
  return out;
}

std::uint64_t replicate_seed(std::uint64_t master, const Scenario& s,
                             std::size_t replicate) {
  return derive_seed(master, stable_hash(s.id()), replicate);
}

}  // namespace commcp
