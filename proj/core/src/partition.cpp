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

#include "commcp/partition.hpp"

#include <algorithm>
#include <map>

#include "commcp/error.hpp"
#include "commcp/text_table.hpp"

namespace commcp {

Partition Partition::from_assignment(std::vector<CommunityId> assignment,
                                     std::vector<std::string> names) {
  Partition p;
  CommunityId max_id = 0;
  for (CommunityId c : assignment) max_id = std::max(max_id, c);
  const std::size_t k = assignment.empty() ? 0 : std::size_t{max_id} + 1;
  p.sizes_.assign(k, 0);
  for (CommunityId c : assignment) ++p.sizes_[c];
  for (std::size_t c = 0; c < k; ++c) {
    if (p.sizes_[c] == 0) {
      throw InvalidArgument("community " + std::to_string(c) + " is empty");
    }
  }
  if (names.empty()) {
    for (std::size_t c = 0; c < k; ++c) names.push_back(std::to_string(c));
  } else if (names.size() != k) {
    throw InvalidArgument("community name count does not match K");
  }
  p.assignment_ = std::move(assignment);
  p.names_ = std::move(names);
  return p;
}

std::vector<std::vector<NodeId>> Partition::members() const {
  std::vector<std::vector<NodeId>> out(community_count());
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    out[assignment_[v]].push_back(static_cast<NodeId>(v));
  }
  return out;
}

Partition Partition::relabeled(std::span<const CommunityId> perm) const {
  if (perm.size() != community_count()) {
    throw InvalidArgument("permutation length does not match K");
  }
  std::vector<CommunityId> assignment(assignment_.size());
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    assignment[v] = perm[assignment_[v]];
  }
  std::vector<std::string> names(names_.size());
  for (std::size_t c = 0; c < names_.size(); ++c) names[perm[c]] = names_[c];
  return from_assignment(std::move(assignment), std::move(names));
}

Partition partition_from_labels(
    std::span<const std::optional<std::string>> labels) {
  if (labels.empty()) throw DataError("no labels given");
  std::map<std::string, CommunityId> index;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!labels[v]) {
      throw DataError("node " + std::to_string(v) + " has no community label");
    }
    index.emplace(*labels[v], 0);
  }
  std::vector<std::string> names;
  for (auto& [label, id] : index) {
    id = static_cast<CommunityId>(names.size());
    names.push_back(label);
  }
  std::vector<CommunityId> assignment(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    assignment[v] = index.at(*labels[v]);
  }
  return Partition::from_assignment(std::move(assignment), std::move(names));
}

Partition partition_from_attribute(const Graph& g, const std::string& key) {
  const auto& column = g.attributes().column(key);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!column[v]) {
      throw DataError("node '" + g.label(v) + "' has no value for '" + key + "'");
    }
  }
  return partition_from_labels(column);
}

Partition read_partition(std::istream& in, const Graph& g) {
  const auto table = text::read_table(in);
  if (table.header.size() != 2) {
    throw DataError("partition table must have exactly two columns: node,community");
  }
  std::vector<std::optional<std::string>> labels(g.node_count());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const auto line = std::to_string(table.line_numbers[r]);
    auto node = g.find(row[0]);
    if (!node) throw DataError("line " + line + ": unknown node '" + row[0] + "'");
    if (labels[*node]) {
      throw DataError("line " + line + ": node '" + row[0] + "' listed twice");
    }
    if (row[1].empty()) throw DataError("line " + line + ": empty community");
    labels[*node] = row[1];
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!labels[v]) {
      throw DataError("node '" + g.label(v) + "' is missing from the partition");
    }
  }
  return partition_from_labels(labels);
}

void write_partition(const Partition& p, const Graph& g, std::ostream& out) {
  out << "node,community\n";
  for (NodeId v = 0; v < p.node_count(); ++v) {
    out << g.label(v) << ',' << p.names()[p.community_of(v)] << '\n';
  }
}

double modularity(const Graph& g, const Partition& p, double resolution) {
  const double m = static_cast<double>(g.edge_count());
  if (m == 0.0) return 0.0;
  std::vector<double> internal(p.community_count(), 0.0);
  std::vector<double> total(p.community_count(), 0.0);
  for (const auto& e : g.edges()) {
    if (p.community_of(e.u) == p.community_of(e.v)) {
      internal[p.community_of(e.u)] += 1.0;
    }
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    total[p.community_of(v)] += static_cast<double>(g.degree(v));
  }
  double q = 0.0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    q += internal[c] / m - resolution * (total[c] / (2.0 * m)) * (total[c] / (2.0 * m));
  }
  return q;
}

}  // namespace commcp
