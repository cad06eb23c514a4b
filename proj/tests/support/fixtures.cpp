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


#include "support/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace fixtures {

using commcp::Graph;

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return commcp::load_edge_list(in).graph;
}

Graph graph_from_pairs(std::size_t n, const oracle::EdgeList& edges) {
  std::vector<commcp::Edge> out;
  for (auto [u, v] : edges) {
    out.push_back({static_cast<commcp::NodeId>(u), static_cast<commcp::NodeId>(v)});
  }
  return Graph(n, std::move(out));
}

oracle::EdgeList pairs_of(const Graph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Graph path(std::size_t n) {
  oracle::EdgeList e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return graph_from_pairs(n, e);
}

Graph complete(std::size_t n) {
  oracle::EdgeList e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return graph_from_pairs(n, e);
}

Graph star(std::size_t leaves) {
  oracle::EdgeList e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return graph_from_pairs(leaves + 1, e);
}

Graph random_graph(std::size_t n, double p, commcp::Rng& rng) {
  std::bernoulli_distribution coin(p);
  oracle::EdgeList e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) e.emplace_back(i, j);
    }
  }
  return graph_from_pairs(n, e);
}

std::vector<commcp::CommunityId> random_assignment(std::size_t n, std::size_t k,
                                                   commcp::Rng& rng) {
  std::vector<commcp::CommunityId> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<commcp::CommunityId>(i % k);
  std::shuffle(a.begin(), a.end(), rng);
  return a;
}

oracle::Matrix random_theta(std::size_t k, double zero_prob, commcp::Rng& rng) {
  std::bernoulli_distribution zero(zero_prob);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  oracle::Matrix m(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double x = zero(rng) ? 0.0 : 1.0 - value(rng);
      m[i][j] = x;
      m[j][i] = x;
    }
  }
  return m;
}

oracle::Matrix planted_theta(const std::vector<int>& z, commcp::Rng& rng) {
  std::uniform_real_distribution<double> noise(0.7, 1.3);
  const std::size_t k = z.size();
  oracle::Matrix m(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const int cores = z[i] + z[j];
      const double base = cores == 2 ? 0.4 : cores == 1 ? 0.08 : 0.01;
      const double x = std::min(1.0, base * noise(rng));
      m[i][j] = x;
      m[j][i] = x;
    }
  }
  return m;
}

commcp::ConnectivityMatrix to_connectivity(const oracle::Matrix& m) {
  return commcp::connectivity_from_rows(m);
}

std::vector<int> to_ints(const commcp::CpAssignment& z) {
  return std::vector<int>(z.bits().begin(), z.bits().end());
}

std::vector<int> to_ints(std::span<const commcp::CommunityId> xs) {
  return std::vector<int>(xs.begin(), xs.end());
}

std::vector<int> random_admissible(std::size_t k, commcp::Rng& rng) {
  std::uniform_int_distribution<std::size_t> cores(2, k - 2);
  std::vector<int> z(k, 0);
  std::fill_n(z.begin(), cores(rng), 1);
  std::shuffle(z.begin(), z.end(), rng);
  return z;
}

}  // namespace fixtures
