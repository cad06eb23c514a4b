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

#include "commcp/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "commcp/error.hpp"
#include "commcp/text_table.hpp"

namespace commcp {

void NodeAttributes::set_column(const std::string& key,
                                std::vector<std::optional<std::string>> values) {
  if (values.size() != node_count_) {
    throw InvalidArgument("attribute column '" + key + "' has " +
                          std::to_string(values.size()) + " values for " +
                          std::to_string(node_count_) + " nodes");
  }
  if (!has_key(key)) keys_.push_back(key);
  columns_[key] = std::move(values);
}

bool NodeAttributes::has_key(std::string_view key) const {
  return columns_.find(key) != columns_.end();
}

const std::vector<std::optional<std::string>>& NodeAttributes::column(
    std::string_view key) const {
  auto it = columns_.find(key);
  if (it == columns_.end()) {
    throw DataError("unknown attribute key '" + std::string(key) + "'");
  }
  return it->second;
}

const std::optional<std::string>& NodeAttributes::get(
    NodeId node, std::string_view key) const {
  return column(key).at(node);
}

Graph::Graph(std::size_t node_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : node_count_(node_count), labels_(std::move(labels)),
      attributes_(node_count) {
  if (!labels_.empty() && labels_.size() != node_count_) {
    throw InvalidArgument("label count does not match node count");
  }
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw InvalidArgument("self-loop on node " + std::to_string(e.u));
    }
    if (e.u >= node_count_ || e.v >= node_count_) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  offsets_.assign(node_count_ + 1, 0);
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < node_count_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < node_count_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (!index_.emplace(labels_[v], static_cast<NodeId>(v)).second) {
      throw InvalidArgument("duplicate node label '" + labels_[v] + "'");
    }
  }
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a >= node_count_ || b >= node_count_) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::string Graph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  if (labels_.empty()) {
    NodeId id = 0;
    std::istringstream is{std::string(label)};
    if (is >> id && is.eof() && id < node_count_) return id;
    return std::nullopt;
  }
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::with_attributes(NodeAttributes attributes) const {
  Graph copy = *this;
  copy.attributes_ = std::move(attributes);
  return copy;
}

EdgeListResult load_edge_list(std::istream& in, const EdgeListOptions& options) {
  EdgeListResult result;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::optional<text::Delimiter> delim;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::is_blank_or_comment(line)) continue;
    ++result.lines_read;
    const auto body = text::trim(line);
    if (!delim) delim = text::detect_delimiter(body);
    auto fields = text::split(body, *delim);
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": expected two node tokens");
    }
    if (fields.size() > 2) {
      if (options.strict) {
        throw DataError("line " + std::to_string(line_no) + ": expected 2 fields, got " +
                        std::to_string(fields.size()));
      }
      ++result.extra_columns_ignored;
    }
    if (fields[0] == fields[1]) {
      if (options.strict) {
        throw DataError("line " + std::to_string(line_no) + ": self-loop on '" +
                        fields[0] + "'");
      }
      intern(fields[0]);
      ++result.self_loops_dropped;
      continue;
    }
    NodeId a = intern(fields[0]);
    NodeId b = intern(fields[1]);
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      ++result.duplicates_collapsed;
      continue;
    }
    edges.push_back(e);
  }

  if (result.duplicates_collapsed + result.self_loops_dropped +
          result.extra_columns_ignored > 0) {
    std::ostringstream os;
    os << "edge list: collapsed " << result.duplicates_collapsed
       << " duplicate edge(s), dropped " << result.self_loops_dropped
       << " self-loop(s), ignored extra columns on "
       << result.extra_columns_ignored << " line(s)";
    result.warning = os.str();
  }
  const std::size_t n = labels.size();
  result.graph = Graph(n, std::move(edges), std::move(labels));
  return result;
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << '\t' << g.label(e.v) << '\n';
  }
}

NodeAttributes read_attributes(std::istream& in, const Graph& g) {
  const auto table = text::read_table(in);
  if (table.header.size() < 2) {
    throw DataError("attribute table needs a node column and at least one key");
  }
  NodeAttributes attrs(g.node_count());
  std::vector<std::vector<std::optional<std::string>>> columns(
      table.header.size() - 1,
      std::vector<std::optional<std::string>>(g.node_count()));
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    auto node = g.find(row[0]);
    if (!node) {
      throw DataError("line " + std::to_string(table.line_numbers[r]) +
                      ": unknown node '" + row[0] + "'");
    }
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (!row[c].empty()) columns[c - 1][*node] = row[c];
    }
  }
  for (std::size_t c = 1; c < table.header.size(); ++c) {
    attrs.set_column(table.header[c], std::move(columns[c - 1]));
  }
  return attrs;
}

}  // namespace commcp
