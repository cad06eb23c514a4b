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

#ifndef COMMCP_BASELINE_HPP_
#define COMMCP_BASELINE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "commcp/graph.hpp"
#include "commcp/search.hpp"

namespace commcp {

// Node-level discrete core-periphery model (Borgatti-Everett). The ideal
// pattern links every pair with at least one core endpoint; fit quality is
// the Pearson correlation between adjacency and pattern over unordered node
// pairs.
struct NodeCpResult {
  std::vector<std::uint8_t> core;  // 1 = core
  double correlation = 0.0;
  SearchMode mode_used = SearchMode::exhaustive;
  std::uint64_t evaluations = 0;
  SearchConfig settings;
  // Adjacency has no variance (complete graph); every split ties at 0.
  bool degenerate = false;
};

// Correlation of the adjacency with the pattern induced by `core`, computed
// in O(|V| + |E|) from edge and pair counts. Returns 0 when either side has
// zero variance.
double pattern_correlation(const Graph& g, std::span<const std::uint8_t> core);

// Maximizes pattern_correlation over node vectors with at least one core and
// one periphery node. Automatic mode enumerates all vectors when the graph
// has at most cfg.exhaustive_threshold nodes and otherwise runs the GA, whose
// initial population includes the best degree-ranked prefix cores. Ties go
// to the smaller core, then to lower node ids; a complete graph returns core
// = {node 0}. Throws DataError for fewer than four nodes or no edges.
NodeCpResult be_fit(const Graph& g, const SearchConfig& cfg);

struct DegreeRow {
  std::string cls;  // "core" or "periphery"
  std::size_t count = 0;
  std::optional<double> mean;
  std::optional<double> sd;  // sample sd; absent below two members
  std::optional<double> median;
  std::optional<std::size_t> min;
  std::optional<std::size_t> max;
};

// Degree distribution per class, core row first.
std::array<DegreeRow, 2> degree_table(const Graph& g,
                                      std::span<const std::uint8_t> core);

}  // namespace commcp

#endif  // COMMCP_BASELINE_HPP_
