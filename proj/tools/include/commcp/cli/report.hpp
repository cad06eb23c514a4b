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


#ifndef COMMCP_CLI_REPORT_HPP_
#define COMMCP_CLI_REPORT_HPP_

#include <nlohmann/json.hpp>

#include <span>
#include <string>
#include <vector>

#include "commcp/commcp.hpp"

namespace commcp::cli {

using Json = nlohmann::ordered_json;

Json to_json(const GraphStats& stats);
Json to_json(const ObjectiveBreakdown& b);
Json to_json(const SearchConfig& cfg);
Json to_json(const SearchResult& r);
Json to_json(const ConnectivityMatrix& theta);
Json to_json(const DegreeRow& row);
Json to_json(const MetricSummary& m);
Json to_json(const CellSummary& c);
Json to_json(const EvalRecord& r);
Json to_json(const Scenario& s);

// Leaders keyed by graph labels and community names.
Json leaders_json(const Graph& g, const Partition& p, std::span<const LeaderRecord> leaders,
                  const CpAssignment& z);
Json to_json(const LeaderSummary& s);

// Shared reproducibility block: tool, version, command, seed, config echo.
Json meta_json(const std::string& command, std::uint64_t seed, const std::string& echo);

// Fixed-point-free formatting with six significant digits.
std::string fmt(double x);

}  // namespace commcp::cli

#endif  // COMMCP_CLI_REPORT_HPP_
