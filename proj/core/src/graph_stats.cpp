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

#include <algorithm>
#include <map>

#include "commcp/error.hpp"
#include "commcp/graph.hpp"

namespace commcp {

double density(std::size_t node_count, std::size_t edge_count) {
  if (node_count < 2) return 0.0;
  const double n = static_cast<double>(node_count);
  return 2.0 * static_cast<double>(edge_count) / (n * (n - 1.0));
}

double transitivity(const Graph& g) {
  double triangles = 0.0;  // each counted once per closing wedge
  double triples = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double d = static_cast<double>(g.degree(v));
    triples += d * (d - 1.0) / 2.0;
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) triangles += 1.0;
      }
    }
  }
  return triples > 0.0 ? triangles / triples : 0.0;
}

GraphStats compute_stats(const Graph& g, std::optional<std::string> group_by,
                         std::span<const double> precomputed_betweenness) {
  GraphStats s;
  const std::size_t n = g.node_count();
  s.node_count = n;
  s.edge_count = g.edge_count();
  s.density = density(n, g.edge_count());
  s.mean_degree = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) /
                                     static_cast<double>(n);
  std::vector<double> bc;
  if (precomputed_betweenness.size() == n) {
    bc.assign(precomputed_betweenness.begin(), precomputed_betweenness.end());
  } else {
    bc = betweenness(g);
  }
  double total_bc = 0.0;
  for (double b : bc) total_bc += b;
  s.mean_betweenness = n == 0 ? 0.0 : total_bc / static_cast<double>(n);
  s.transitivity = transitivity(g);

  if (!group_by) return s;
  s.group_by = group_by;
  const auto& column = g.attributes().column(*group_by);
  std::map<std::string, std::size_t> group_index;
  std::vector<std::size_t> node_group(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!column[v]) {
      throw DataError("node '" + g.label(v) + "' has no value for attribute '" +
                      *group_by + "'");
    }
    group_index.emplace(*column[v], 0);
  }
  std::size_t next = 0;
  for (auto& [value, idx] : group_index) {
    idx = next++;
    s.groups.push_back(GroupStats{.value = value});
  }
  for (NodeId v = 0; v < n; ++v) {
    node_group[v] = group_index.at(*column[v]);
    auto& grp = s.groups[node_group[v]];
    ++grp.node_count;
    grp.mean_degree += static_cast<double>(g.degree(v));
    grp.mean_betweenness += bc[v];
  }
  for (const auto& e : g.edges()) {
    if (node_group[e.u] == node_group[e.v]) ++s.groups[node_group[e.u]].edge_count;
  }
  for (auto& grp : s.groups) {
    const double count = static_cast<double>(grp.node_count);
    grp.mean_degree /= count;
    grp.mean_betweenness /= count;
    grp.density = density(grp.node_count, grp.edge_count);
  }
  return s;
}

}  // namespace commcp
