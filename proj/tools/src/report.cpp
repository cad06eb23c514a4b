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


#include "commcp/cli/report.hpp"

#include <sstream>

namespace commcp::cli {
namespace {

template <typename T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Json to_json(const GraphStats& stats) {
  Json j;
  j["nodes"] = stats.node_count;
  j["edges"] = stats.edge_count;
  j["density"] = stats.density;
  j["mean_degree"] = stats.mean_degree;
  j["mean_betweenness"] = stats.mean_betweenness;
  j["transitivity"] = stats.transitivity;
  if (stats.group_by) {
    j["group_by"] = *stats.group_by;
    Json groups = Json::array();
    for (const auto& g : stats.groups) {
      groups.push_back({{"value", g.value},
                        {"nodes", g.node_count},
                        {"edges", g.edge_count},
                        {"density", g.density},
                        {"mean_degree", g.mean_degree},
                        {"mean_betweenness", g.mean_betweenness}});
    }
    j["groups"] = std::move(groups);
  }
  return j;
}

Json to_json(const ObjectiveBreakdown& b) {
  const bool mean = b.kind == ObjectiveKind::mean;
  const char* center = mean ? "mean" : "median";
  const char* spread = mean ? "sd" : "iqr";
  Json j;
  j["kind"] = std::string(to_string(b.kind));
  j["value"] = b.value;
  j["core"] = {{"density", b.core_density},
               {center, b.core_center},
               {spread, b.core_spread},
               {"nonzero", b.core_set_size},
               {"pairs", b.core_pairs}};
  j["periphery"] = {{"density", b.periphery_density},
                    {center, b.periphery_center},
                    {spread, b.periphery_spread},
                    {"nonzero", b.periphery_set_size},
                    {"pairs", b.periphery_pairs}};
  return j;
}

Json to_json(const SearchConfig& cfg) {
  return {{"objective", std::string(to_string(cfg.objective))},
          {"mode", std::string(to_string(cfg.mode))},
          {"exhaustive_threshold", cfg.exhaustive_threshold},
          {"population_size", cfg.population_size},
          {"generations", cfg.generations},
          {"crossover_rate", cfg.crossover_rate},
          {"mutation_rate", cfg.mutation_rate},
          {"elitism_count", cfg.elitism_count},
          {"stall_generations", cfg.stall_generations},
          {"seed", cfg.seed}};
}

Json to_json(const SearchResult& r) {
  Json ties = Json::array();
  for (const auto& z : r.ties) ties.push_back(z.to_string());
  return {{"mode_used", std::string(to_string(r.mode_used))},
          {"assignment", r.best.to_string()},
          {"core_communities", r.best.core_count()},
          {"periphery_communities", r.best.periphery_count()},
          {"objective", r.objective},
          {"breakdown", to_json(r.breakdown)},
          {"ties", std::move(ties)},
          {"evaluations", r.evaluations}};
}

Json to_json(const ConnectivityMatrix& theta) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < theta.size(); ++k) {
    Json row = Json::array();
    for (std::size_t l = 0; l < theta.size(); ++l) row.push_back(theta(k, l));
    rows.push_back(std::move(row));
  }
  Json j;
  j["names"] = theta.names();
  j["values"] = std::move(rows);
  if (!theta.community_sizes().empty()) {
    j["sizes"] = std::vector<std::size_t>(theta.community_sizes().begin(),
                                          theta.community_sizes().end());
  }
  return j;
}

Json to_json(const DegreeRow& row) {
  return {{"class", row.cls},         {"count", row.count},
          {"mean", optional_json(row.mean)}, {"sd", optional_json(row.sd)},
          {"median", optional_json(row.median)}, {"min", optional_json(row.min)},
          {"max", optional_json(row.max)}};
}

Json to_json(const MetricSummary& m) {
  if (m.count == 0) return {{"count", 0}};
  return {{"count", m.count}, {"mean", m.mean},   {"sd", m.sd},
          {"q1", m.q1},       {"median", m.median}, {"q3", m.q3}};
}

Json to_json(const CellSummary& c) {
  return {{"scenario_id", c.scenario_id}, {"detector", c.detector},
          {"records", c.records},         {"failures", c.failures},
          {"ba", to_json(c.ba)},          {"f1", to_json(c.f1)},
          {"estimated_K", to_json(c.estimated_k)}};
}

Json to_json(const Scenario& s) {
  return {{"scenario_id", s.id()},
          {"n", s.n},
          {"K", s.k},
          {"lambda", s.lambda_pct},
          {"size_mode", std::string(to_string(s.size_mode))}};
}

Json to_json(const EvalRecord& r) {
  Json j = to_json(r.scenario);
  j["detector"] = r.detector;
  j["replicate"] = r.replicate;
  j["estimated_K"] = r.estimated_k;
  j["ba"] = optional_json(r.ba);
  j["f1"] = optional_json(r.f1);
  j["phi_best"] = optional_json(r.phi_best);
  j["runtime_ms"] = r.runtime_ms;
  if (r.z_detected.size() > 0) j["assignment"] = r.z_detected.to_string();
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

Json leaders_json(const Graph& g, const Partition& p, std::span<const LeaderRecord> leaders,
                  const CpAssignment& z) {
  Json out = Json::array();
  for (const auto& l : leaders) {
    out.push_back({{"community", p.names()[l.community]},
                   {"role", z.is_core(l.community) ? "core" : "periphery"},
                   {"rank", l.rank},
                   {"node", g.label(l.node)},
                   {"inter_community_degree", l.inter_community_degree},
                   {"degree", l.degree},
                   {"betweenness", l.betweenness}});
  }
  return out;
}

Json to_json(const LeaderSummary& s) {
  auto side = [](const LeaderSide& x) {
    return Json{{"leaders", x.leaders},
                {"mean_degree", optional_json(x.mean_degree)},
                {"mean_betweenness", optional_json(x.mean_betweenness)}};
  };
  Json counts = Json::object();
  for (const auto& [key, values] : s.counts) {
    Json per = Json::object();
    for (const auto& [value, c] : values) per[value] = {{"core", c[0]}, {"periphery", c[1]}};
    counts[key] = std::move(per);
  }
  return {{"core", side(s.core)}, {"periphery", side(s.periphery)}, {"counts", counts}};
}

Json meta_json(const std::string& command, std::uint64_t seed, const std::string& echo) {
  return {{"tool", "commcp"},
          {"version", kVersion},
          {"command", command},
          {"seed", seed},
          {"config", echo}};
}

}  // namespace commcp::cli
