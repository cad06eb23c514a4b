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

#ifndef COMMCP_PARTITION_HPP_
#define COMMCP_PARTITION_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "commcp/graph.hpp"

namespace commcp {

using CommunityId = std::uint32_t;

// Surjective map node -> community in 0..K-1. Every community is non-empty.
class Partition {
 public:
  Partition() = default;

  // Throws InvalidArgument if some index in 0..max is unused. `names`, if
  // given, holds one display name per community; defaults to "0".."K-1".
  static Partition from_assignment(std::vector<CommunityId> assignment,
                                   std::vector<std::string> names = {});

  std::size_t node_count() const { return assignment_.size(); }
  std::size_t community_count() const { return sizes_.size(); }
  CommunityId community_of(NodeId v) const { return assignment_[v]; }
  std::span<const CommunityId> assignment() const { return assignment_; }
  std::span<const std::size_t> sizes() const { return sizes_; }
  const std::vector<std::string>& names() const { return names_; }

  std::vector<std::vector<NodeId>> members() const;

  // Community k is renamed perm[k]. `perm` must be a permutation of 0..K-1.
  Partition relabeled(std::span<const CommunityId> perm) const;

 private:
  std::vector<CommunityId> assignment_;
  std::vector<std::size_t> sizes_;
  std::vector<std::string> names_;
};

// Distinct labels become communities 0..K-1 in lexicographic label order.
// `labels` holds one entry per node; a missing entry is a DataError.
Partition partition_from_labels(std::span<const std::optional<std::string>> labels);

// Uses a node attribute column as the labelling.
Partition partition_from_attribute(const Graph& g, const std::string& key);

// Reads `node,community` (header required, delimiter auto-detected). Every
// graph node must appear exactly once.
Partition read_partition(std::istream& in, const Graph& g);

void write_partition(const Partition& p, const Graph& g, std::ostream& out);

// Newman-Girvan modularity with resolution gamma. Returns 0 for an edgeless
// graph.
double modularity(const Graph& g, const Partition& p, double resolution = 1.0);

struct LouvainOptions {
  std::uint64_t seed = 0;
  double resolution = 1.0;
  // Safety bound on node-move sweeps per level.
  std::size_t max_sweeps = 1000;
};

struct LouvainResult {
  Partition partition;
  // Modularity after each local-move phase; non-decreasing.
  std::vector<double> modularity_trace;
  std::size_t levels = 0;
};

// Greedy modularity maximization with local moves and aggregation. Node
// visiting order is a seeded shuffle; among equal gains the lowest community
// index wins, and a node only moves on strict improvement. Isolated nodes
// stay singletons. Communities are numbered by first member in node order.
LouvainResult louvain(const Graph& g, const LouvainOptions& options = {});

Partition louvain_partition(const Graph& g, std::uint64_t seed);

}  // namespace commcp

#endif  // COMMCP_PARTITION_HPP_
