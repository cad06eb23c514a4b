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


// Randomized invariants. Generators are small hand-written samplers seeded
// per test so failures replay exactly.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "commcp/commcp.hpp"
#include "support/fixtures.hpp"

namespace commcp {
namespace {

constexpr int kCases = 300;

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

CpAssignment random_z(std::size_t k, Rng& rng) {
  std::vector<std::uint8_t> bits;
  for (int b : fixtures::random_admissible(k, rng)) bits.push_back(static_cast<std::uint8_t>(b));
  return CpAssignment(bits);
}

TEST(ObjectiveProperties, FlipIdentity) {
  Rng rng(61);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t k = 4 + rng() % 9;
    const auto theta = fixtures::to_connectivity(fixtures::random_theta(k, 0.3, rng));
    const auto z = random_z(k, rng);
    for (auto kind : {ObjectiveKind::mean, ObjectiveKind::median}) {
      const auto a = evaluate_objective(z, theta, kind);
      const auto b = evaluate_objective(z.complement(), theta, kind);
      EXPECT_NEAR(a.value + b.value, -2 * (a.core_spread + a.periphery_spread), 1e-12);
      EXPECT_LE(a.value + b.value, 1e-12);
    }
  }
}

TEST(ObjectiveProperties, PermutationEquivariance) {
  Rng rng(62);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t k = 4 + rng() % 9;
    const auto theta = fixtures::to_connectivity(fixtures::random_theta(k, 0.3, rng));
    const auto z = random_z(k, rng);
    const auto perm = random_permutation(k, rng);
    EXPECT_EQ(objective_mean(z, theta).value,
              objective_mean(z.permuted(perm), theta.permuted(perm)).value);
    EXPECT_EQ(objective_median(z, theta).value,
              objective_median(z.permuted(perm), theta.permuted(perm)).value);
  }
}

TEST(ObjectiveProperties, CrossEntriesAreIgnored) {
  Rng rng(63);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t k = 4 + rng() % 9;
    auto m = fixtures::random_theta(k, 0.3, rng);
    const auto z = fixtures::random_admissible(k, rng);
    CpAssignment zc(std::vector<std::uint8_t>(z.begin(), z.end()));
    const auto before = objective_mean(zc, fixtures::to_connectivity(m));
    const auto sets_before = build_sets(zc, fixtures::to_connectivity(m));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (z[a] != z[b]) m[a][b] = m[b][a] = std::uniform_real_distribution<>(0, 1)(rng);
      }
    }
    const auto after = objective_mean(zc, fixtures::to_connectivity(m));
    const auto sets_after = build_sets(zc, fixtures::to_connectivity(m));
    EXPECT_EQ(before.value, after.value);
    EXPECT_EQ(sets_before.core, sets_after.core);
    EXPECT_EQ(sets_before.periphery, sets_after.periphery);
  }
}

TEST(ObjectiveProperties, RaisingEqualCoreEntriesNeverHurts) {
  Rng rng(64);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t k = 4 + rng() % 9;
    auto m = fixtures::random_theta(k, 0.2, rng);
    const auto z = fixtures::random_admissible(k, rng);
    const double level = std::uniform_real_distribution<>(0.01, 0.5)(rng);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (a != b && z[a] && z[b]) m[a][b] = level;
      }
    }
    const CpAssignment zc(std::vector<std::uint8_t>(z.begin(), z.end()));
    const double before = objective_mean(zc, fixtures::to_connectivity(m)).value;
    const double bump = std::uniform_real_distribution<>(0.0, 0.5)(rng);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (a != b && z[a] && z[b]) m[a][b] = level + bump;
      }
    }
    EXPECT_GE(objective_mean(zc, fixtures::to_connectivity(m)).value, before - 1e-15);
  }
}

TEST(GraphProperties, DegreeSumIsTwiceEdgeCount) {
  Rng rng(65);
  for (int c = 0; c < 100; ++c) {
    const auto g = fixtures::random_graph(1 + rng() % 60, 0.2, rng);
    std::size_t total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) total += g.degree(v);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(ConnectivityProperties, EdgeAccountingAndRelabeling) {
  Rng rng(66);
  for (int c = 0; c < 100; ++c) {
    const std::size_t n = 10 + rng() % 40, k = 2 + rng() % 6;
    const auto g = fixtures::random_graph(n, 0.2, rng);
    const auto a = fixtures::random_assignment(n, k, rng);
    const auto p = Partition::from_assignment(a);
    const auto theta = estimate_connectivity(g, p);
    double cross = 0;
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) {
        cross += theta(x, y) * static_cast<double>(p.sizes()[x] * p.sizes()[y]);
      }
    }
    std::size_t intra = 0;
    for (const auto& e : g.edges()) intra += a[e.u] == a[e.v];
    EXPECT_NEAR(cross + static_cast<double>(intra), static_cast<double>(g.edge_count()), 1e-9);

    const auto perm = random_permutation(k, rng);
    std::vector<CommunityId> perm_ids(perm.begin(), perm.end());
    const auto moved = estimate_connectivity(g, p.relabeled(perm_ids));
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) EXPECT_EQ(moved(perm[x], perm[y]), theta(x, y));
    }
  }
}

TEST(EvaluationProperties, MajorityVoteRecoversAssignment) {
  Rng rng(67);
  for (int c = 0; c < 100; ++c) {
    const std::size_t k = 4 + rng() % 10, n = k + rng() % 80;
    const auto p = Partition::from_assignment(fixtures::random_assignment(n, k, rng));
    const auto z = random_z(k, rng);
    const auto labels = expand_to_nodes(z, p);
    std::vector<int> votes(k, 0);
    for (NodeId v = 0; v < n; ++v) votes[p.community_of(v)] += labels[v] ? 1 : -1;
    std::vector<std::uint8_t> back(k);
    for (std::size_t x = 0; x < k; ++x) back[x] = votes[x] > 0;
    EXPECT_EQ(CpAssignment(back), z);
  }
}

TEST(SearchProperties, RepairedPopulationStaysAdmissible) {
  Rng rng(68);
  for (int c = 0; c < 50; ++c) {
    const std::size_t k = 4 + rng() % 9;
    const auto theta = fixtures::to_connectivity(fixtures::random_theta(k, 0.4, rng));
    SearchConfig cfg;
    cfg.mode = SearchMode::genetic;
    cfg.seed = rng();
    cfg.generations = 30;
    const auto r = search(theta, cfg);
    EXPECT_TRUE(r.best.admissible(2));
    EXPECT_TRUE(std::is_sorted(r.best_trace.begin(), r.best_trace.end()));
  }
}

TEST(BaselineProperties, IdealTwoBlockIsRecoveredForAnySeed) {
  Rng rng(69);
  for (int c = 0; c < 10; ++c) {
    const std::size_t n = 30 + rng() % 20, cores = 3 + rng() % 8;
    const auto perm = random_permutation(n, rng);
    std::vector<std::uint8_t> truth(n, 0);
    for (std::size_t i = 0; i < cores; ++i) truth[perm[i]] = 1;
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        if (truth[u] || truth[v]) edges.push_back(Edge{u, v});
      }
    }
    SearchConfig cfg;
    cfg.seed = rng();
    const auto fit = be_fit(Graph(n, edges), cfg);
    EXPECT_EQ(fit.mode_used, SearchMode::genetic);
    EXPECT_NEAR(fit.correlation, 1.0, 1e-12);
    EXPECT_EQ(fit.core, truth);
  }
}

TEST(LeaderProperties, EdgeOrderDoesNotMatter) {
  Rng rng(70);
  for (int c = 0; c < 20; ++c) {
    const std::size_t n = 30 + rng() % 30;
    const auto g = fixtures::random_graph(n, 0.12, rng);
    const auto p = Partition::from_assignment(fixtures::random_assignment(n, 5, rng));
    std::vector<Edge> shuffled(g.edges().begin(), g.edges().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& e : shuffled) {
      if (rng() % 2) std::swap(e.u, e.v);
    }
    const auto a = find_leaders(g, p, 3);
    const auto b = find_leaders(Graph(n, shuffled), p, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].node, b[i].node);
  }
}

}  // namespace
}  // namespace commcp
