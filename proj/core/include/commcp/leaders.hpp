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

#ifndef COMMCP_LEADERS_HPP_
#define COMMCP_LEADERS_HPP_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commcp/assignment.hpp"
#include "commcp/graph.hpp"
#include "commcp/partition.hpp"

namespace commcp {

struct LeaderRecord {
  CommunityId community = 0;
  NodeId node = 0;
  // Edges to nodes outside the member's own community.
  std::size_t inter_community_degree = 0;
  std::size_t degree = 0;
  double betweenness = 0.0;
  std::size_t rank = 0;  // 1-based within the community
};

// Top `top` members of every community ranked by inter-community degree,
// then degree, then betweenness (all descending), then node id. Communities
// with fewer members contribute all of them. Output is grouped by community
// in index order. `precomputed_betweenness` may be empty.
std::vector<LeaderRecord> find_leaders(const Graph& g, const Partition& p,
                                       std::size_t top = 3,
                                       std::span<const double> precomputed_betweenness = {});

struct LeaderSide {
  std::size_t leaders = 0;
  std::optional<double> mean_degree;
  std::optional<double> mean_betweenness;
};

struct LeaderSummary {
  LeaderSide core;
  LeaderSide periphery;
  // key -> value -> {core count, periphery count}
  std::map<std::string, std::map<std::string, std::array<std::size_t, 2>>> counts;
};

// Cross-tabulates leaders by side of `z` and by each attribute key. Throws
// InvalidArgument if a leader's community is outside z and DataError if a
// leader lacks one of the keys.
LeaderSummary leader_summary(const Graph& g, std::span<const LeaderRecord> leaders,
                             const CpAssignment& z, std::span<const std::string> keys);

}  // namespace commcp

#endif  // COMMCP_LEADERS_HPP_
