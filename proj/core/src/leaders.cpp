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

#include "commcp/leaders.hpp"

#include <algorithm>
#include <tuple>

#include "commcp/error.hpp"

namespace commcp {

std::vector<LeaderRecord> find_leaders(const Graph& g, const Partition& p,
                                       std::size_t top,
                                       std::span<const double> precomputed_betweenness) {
  if (p.node_count() != g.node_count()) {
    throw InvalidArgument("partition does not cover the graph");
  }
  if (top < 1) throw InvalidArgument("top must be >= 1");
  std::vector<double> bc;
  if (precomputed_betweenness.size() == g.node_count()) {
    bc.assign(precomputed_betweenness.begin(), precomputed_betweenness.end());
  } else {
    bc = betweenness(g);
  }

  std::vector<LeaderRecord> out;
  for (auto& members : p.members()) {
    std::vector<LeaderRecord> rows;
    rows.reserve(members.size());
    for (NodeId v : members) {
      LeaderRecord r;
      r.community = p.community_of(v);
      r.node = v;
      r.degree = g.degree(v);
      r.betweenness = bc[v];
      for (NodeId u : g.neighbors(v)) {
        if (p.community_of(u) != r.community) ++r.inter_community_degree;
      }
      rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end(), [](const LeaderRecord& a, const LeaderRecord& b) {
      return std::tie(b.inter_community_degree, b.degree, b.betweenness, a.node) <
             std::tie(a.inter_community_degree, a.degree, a.betweenness, b.node);
    });
    rows.resize(std::min(top, rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = i + 1;
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

LeaderSummary leader_summary(const Graph& g, std::span<const LeaderRecord> leaders,
                             const CpAssignment& z, std::span<const std::string> keys) {
  LeaderSummary s;
  std::array<double, 2> degree_sum{0.0, 0.0};
  std::array<double, 2> bc_sum{0.0, 0.0};
  for (const auto& key : keys) s.counts[key];
  for (const auto& leader : leaders) {
    if (leader.community >= z.size()) {
      throw InvalidArgument("leader community " + std::to_string(leader.community) +
                            " has no core/periphery assignment");
    }
    const int side = z.is_core(leader.community) ? 0 : 1;
    ++(side == 0 ? s.core : s.periphery).leaders;
    degree_sum[side] += static_cast<double>(leader.degree);
    bc_sum[side] += leader.betweenness;
    for (const auto& key : keys) {
      const auto& value = g.attributes().get(leader.node, key);
      if (!value) {
        throw DataError("leader '" + g.label(leader.node) + "' has no value for '" +
                        key + "'");
      }
      ++s.counts[key][*value][side];
    }
  }
  for (int side = 0; side < 2; ++side) {
    auto& sd = side == 0 ? s.core : s.periphery;
    if (sd.leaders == 0) continue;
    sd.mean_degree = degree_sum[side] / static_cast<double>(sd.leaders);
    sd.mean_betweenness = bc_sum[side] / static_cast<double>(sd.leaders);
  }
  return s;
}

}  // namespace commcp
