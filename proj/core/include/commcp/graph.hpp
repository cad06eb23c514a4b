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

#ifndef COMMCP_GRAPH_HPP_
#define COMMCP_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace commcp {

using NodeId = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Categorical node attributes, one column per key. A missing value is
// represented by std::nullopt.
class NodeAttributes {
 public:
  NodeAttributes() = default;
  explicit NodeAttributes(std::size_t node_count) : node_count_(node_count) {}

  void set_column(const std::string& key,
                  std::vector<std::optional<std::string>> values);

  bool has_key(std::string_view key) const;
  std::vector<std::string> keys() const { return keys_; }
  const std::vector<std::optional<std::string>>& column(
      std::string_view key) const;
  const std::optional<std::string>& get(NodeId node,
                                        std::string_view key) const;
  bool empty() const { return keys_.empty(); }

 private:
  std::size_t node_count_ = 0;
  std::vector<std::string> keys_;
  std::map<std::string, std::vector<std::optional<std::string>>, std::less<>>
      columns_;
};

// Undirected simple graph with dense node ids and CSR adjacency. Immutable
// once constructed; safe to share read-only across threads.
class Graph {
 public:
  Graph() = default;

  // Edges may arrive in either orientation and with duplicates; they are
  // normalized and deduplicated. Throws InvalidArgument on a self-loop or an
  // endpoint >= node_count. `labels` is either empty or one per node.
  Graph(std::size_t node_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId a, NodeId b) const;

  bool has_labels() const { return !labels_.empty(); }
  // External label, or the decimal id when the graph carries no labels.
  std::string label(NodeId v) const;
  std::optional<NodeId> find(std::string_view label) const;

  const NodeAttributes& attributes() const { return attributes_; }
  Graph with_attributes(NodeAttributes attributes) const;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  NodeAttributes attributes_;
};

struct EdgeListOptions {
  // Strict mode rejects self-loops and lines with more than two fields;
  // lenient mode drops self-loops and ignores extra columns.
  bool strict = true;
};

struct EdgeListResult {
  Graph graph;
  std::size_t lines_read = 0;
  std::size_t duplicates_collapsed = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t extra_columns_ignored = 0;
  // One-line human summary of anything dropped or collapsed; empty if clean.
  std::string warning;
};

// Parses an edge list: optional '#' comment lines, two node tokens per line,
// delimiter detected from the first data line (tab, comma, or whitespace).
// Nodes receive dense ids in first-appearance order. Throws DataError naming
// the offending line.
EdgeListResult load_edge_list(std::istream& in,
                              const EdgeListOptions& options = {});

// Tab-delimited, one edge per line, using external labels.
void write_edge_list(const Graph& g, std::ostream& out);

// Attribute table with header `node,<key1>,<key2>,...`. Node tokens are
// resolved through the graph's labels; unknown nodes are a DataError.
// Nodes absent from the table get missing values.
NodeAttributes read_attributes(std::istream& in, const Graph& g);

// Unnormalized shortest-path betweenness (Brandes). Pairs in different
// components contribute nothing; each unordered pair is counted once.
std::vector<double> betweenness(const Graph& g);

// Fraction of connected triples that close into triangles; 0 if none.
double transitivity(const Graph& g);

struct GroupStats {
  std::string value;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;  // edges of the induced subgraph
  double density = 0.0;        // of the induced subgraph
  double mean_degree = 0.0;    // degree in the full graph
  double mean_betweenness = 0.0;
};

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double density = 0.0;
  double mean_degree = 0.0;
  double mean_betweenness = 0.0;
  double transitivity = 0.0;
  std::optional<std::string> group_by;
  std::vector<GroupStats> groups;  // sorted by value
};

// 2|E| / (n(n-1)); 0 for fewer than two nodes.
double density(std::size_t node_count, std::size_t edge_count);

// Descriptive statistics. With `group_by`, every node must carry that
// attribute (DataError otherwise). `precomputed_betweenness` may be passed to
// avoid recomputation.
GraphStats compute_stats(const Graph& g,
                         std::optional<std::string> group_by = std::nullopt,
                         std::span<const double> precomputed_betweenness = {});

}  // namespace commcp

#endif  // COMMCP_GRAPH_HPP_
