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


#include "commcp/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "commcp/cli/report.hpp"
#include "commcp/commcp.hpp"

namespace commcp::cli {
namespace {

enum Stream : std::uint64_t { kSearchStream = 1, kLouvainStream = 2, kBaselineStream = 3 };

std::ifstream open_input(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw DataError(std::string("cannot open ") + what + " '" + path + "'");
  return in;
}

// Binds `out` or a file; the file stays open for the lifetime of the sink.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DataError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << r[c];
      out << (c + 1 < r.size() ? "  " : "\n");
    }
  };
  line(header);
  for (const auto& r : rows) line(r);
  out << std::right;
}

void print_comment_block(std::ostream& out, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out << "#   " << line << '\n';
}

// ---------------------------------------------------------------------------
// Shared option groups.

struct Common {
  std::uint64_t seed = 1;
  std::string format;
  std::string output;
  bool timestamp = false;
};

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats) {
  c.format = formats.front();
  sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sub->add_option("-o,--output", c.output, "Output path (default: stdout)");
  sub->add_flag("--timestamp", c.timestamp, "Add a generation timestamp header")
      ->configurable(false);
}

struct SearchFlags {
  SearchConfig cfg;
  std::string objective = "mean";
  std::string mode = "auto";

  SearchConfig resolve(std::uint64_t seed) const {
    SearchConfig out = cfg;
    out.objective = parse_objective_kind(objective);
    out.mode = parse_search_mode(mode);
    out.seed = seed;
    validate(out);
    return out;
  }
};

void add_search(CLI::App* sub, SearchFlags& s, bool with_objective = true) {
  if (with_objective) {
    sub->add_option("--objective", s.objective, "Objective variant")
        ->check(CLI::IsMember({"mean", "median"}))
        ->capture_default_str();
  }
  sub->add_option("--mode", s.mode, "Search mode")
      ->check(CLI::IsMember({"auto", "exhaustive", "genetic"}))
      ->capture_default_str();
  sub->add_option("--exhaustive-threshold", s.cfg.exhaustive_threshold,
                  "Largest size searched exhaustively in auto mode")
      ->capture_default_str();
  sub->add_option("--population", s.cfg.population_size, "GA population size")
      ->capture_default_str();
  sub->add_option("--generations", s.cfg.generations, "GA generation cap")
      ->capture_default_str();
  sub->add_option("--crossover", s.cfg.crossover_rate, "GA crossover rate")
      ->capture_default_str();
  sub->add_option("--mutation", s.cfg.mutation_rate,
                  "GA per-bit mutation rate (negative: 1/length)")
      ->capture_default_str();
  sub->add_option("--elitism", s.cfg.elitism_count, "GA elite count")->capture_default_str();
  sub->add_option("--stall", s.cfg.stall_generations,
                  "Stop after this many generations without improvement")
      ->capture_default_str();
}

struct GraphFlags {
  std::string graph;
  std::string attributes;
  bool lenient = false;
};

void add_graph(CLI::App* sub, GraphFlags& g) {
  sub->add_option("-g,--graph", g.graph, "Edge list file")->required();
  sub->add_option("--attributes", g.attributes, "Node attribute table (node,<key>,...)");
  sub->add_flag("--lenient", g.lenient, "Drop self-loops and ignore columns beyond the first two");
}

Graph load_graph(const GraphFlags& flags, std::ostream& err) {
  auto in = open_input(flags.graph, "graph file");
  auto loaded = load_edge_list(in, EdgeListOptions{.strict = !flags.lenient});
  if (!loaded.warning.empty()) err << "warning: " << loaded.warning << '\n';
  Graph g = std::move(loaded.graph);
  if (!flags.attributes.empty()) {
    auto attr_in = open_input(flags.attributes, "attribute file");
    g = g.with_attributes(read_attributes(attr_in, g));
  }
  return g;
}

struct PartitionFlags {
  std::string file;
  std::string attribute;
  bool louvain = false;
  double resolution = 1.0;
};

void add_partition(CLI::App* sub, PartitionFlags& p) {
  sub->add_option("--partition", p.file, "Partition file (node,community)");
  sub->add_option("--attribute", p.attribute, "Partition by this node attribute");
  sub->add_flag("--louvain", p.louvain, "Partition with the built-in Louvain detector");
  sub->add_option("--resolution", p.resolution, "Louvain resolution")->capture_default_str();
}

struct ResolvedPartition {
  Partition partition;
  std::string source;
};

ResolvedPartition resolve_partition(const PartitionFlags& flags, const Graph& g,
                                    std::uint64_t seed) {
  const int sources = static_cast<int>(!flags.file.empty()) +
                      static_cast<int>(!flags.attribute.empty()) +
                      static_cast<int>(flags.louvain);
  if (sources != 1) {
    throw InvalidArgument(
        "choose exactly one partition source: --partition, --attribute or --louvain");
  }
  if (!flags.file.empty()) {
    auto in = open_input(flags.file, "partition file");
    return {read_partition(in, g), "file:" + flags.file};
  }
  if (!flags.attribute.empty()) {
    return {partition_from_attribute(g, flags.attribute), "attribute:" + flags.attribute};
  }
  LouvainOptions opts;
  opts.seed = derive_seed(seed, kLouvainStream);
  opts.resolution = flags.resolution;
  return {louvain(g, opts).partition, "louvain"};
}

void require_four_communities(const Partition& p) {
  if (p.community_count() < 4) {
    throw InfeasibleError(
        "core-periphery partition requires at least four communities (found " +
        std::to_string(p.community_count()) + ")");
  }
}

std::uint8_t parse_role(const std::string& token, std::size_t line) {
  if (token == "1" || token == "core") return 1;
  if (token == "0" || token == "periphery") return 0;
  throw DataError("line " + std::to_string(line) + ": expected 1/0 or core/periphery, got '" +
                  token + "'");
}

// Two-column table `node,<role>`; every graph node must be listed.
std::vector<std::uint8_t> read_roles(const std::string& path, const Graph& g) {
  auto in = open_input(path, "label file");
  const auto table = text::read_table(in);
  if (table.header.size() < 2) throw DataError("label file needs a node and a role column");
  std::vector<int> roles(g.node_count(), -1);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const auto node = g.find(row[0]);
    if (!node) {
      throw DataError("line " + std::to_string(table.line_numbers[i]) + ": unknown node '" +
                      row[0] + "'");
    }
    roles[*node] = parse_role(row[1], table.line_numbers[i]);
  }
  std::vector<std::uint8_t> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (roles[v] < 0) throw DataError("label file has no entry for node '" + g.label(v) + "'");
    out[v] = static_cast<std::uint8_t>(roles[v]);
  }
  return out;
}

// INI text that reproduces the run when passed back through --config.
// Options marked non-configurable (worker count, timestamp) are left out.
// Lists always serialize as arrays so the echo is a fixed point.
std::string config_echo(const CLI::App& sub) {
  std::ostringstream os;
  os << '[' << sub.get_name() << "]\n";
  for (const CLI::Option* opt : sub.get_options()) {
    if (!opt->get_configurable() || opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help") continue;
    if (opt->get_expected_min() == 0) {
      os << name << '=' << (opt->count() > 0 && opt->as<bool>() ? "true" : "false") << '\n';
      continue;
    }
    const bool list = opt->get_items_expected_max() > 1;
    std::vector<std::string> values;
    if (opt->count() > 0) {
      values = opt->reduced_results();
    } else {
      std::string d = opt->get_default_str();
      if (list && d.size() >= 2 && d.front() == '[' && d.back() == ']') {
        d = d.substr(1, d.size() - 2);
      }
      values = list ? CLI::detail::split(d, ',') : std::vector<std::string>{d};
    }
    if (list) {
      values.erase(std::remove(values.begin(), values.end(), std::string()), values.end());
      if (values.empty()) continue;
    }
    os << name << '=';
    if (list) os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
      os << (i > 0 ? ", " : "") << '"' << values[i] << '"';
    }
    if (list) os << ']';
    os << '\n';
  }
  return os.str();
}

void write_json(std::ostream& out, Json doc, const Common& common) {
  if (common.timestamp) doc["generated_at"] = utc_timestamp();
  out << doc.dump(2) << '\n';
}

void write_text_header(std::ostream& out, const std::string& command, const Common& common,
                       const std::string& echo) {
  out << "# commcp " << kVersion << ' ' << command << '\n';
  if (common.timestamp) out << "# generated_at " << utc_timestamp() << '\n';
  out << "# seed " << common.seed << '\n';
  out << "# config\n";
  print_comment_block(out, echo);
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeFlags {
  Common common;
  GraphFlags graph;
  PartitionFlags partition;
  SearchFlags search;
  std::string truth;
  std::string group_by;
  std::vector<std::string> leader_keys;
  std::size_t top = 3;
};

void cmd_analyze(const AnalyzeFlags& f, const std::string& echo, std::ostream& out,
                 std::ostream& err) {
  const Graph g = load_graph(f.graph, err);
  const auto part = resolve_partition(f.partition, g, f.common.seed);
  const Partition& p = part.partition;
  require_four_communities(p);
  const auto cfg = f.search.resolve(derive_seed(f.common.seed, kSearchStream));
  const auto theta = estimate_connectivity(g, p);
  const auto result = search(theta, cfg);
  const auto labels = expand_to_nodes(result.best, p);
  const auto bc = betweenness(g);
  const auto stats = compute_stats(
      g, f.group_by.empty() ? std::nullopt : std::optional<std::string>(f.group_by), bc);
  const auto leaders = find_leaders(g, p, f.top, bc);
  const auto summary = leader_summary(g, leaders, result.best, f.leader_keys);
  std::optional<double> ba, f1;
  if (!f.truth.empty()) {
    const auto truth = read_roles(f.truth, g);
    ba = balanced_accuracy(labels, truth);
    f1 = f1_score(labels, truth);
  }

  Sink sink(f.common.output, out);
  std::ostream& os = sink.get();
  if (f.common.format == "json") {
    Json doc = meta_json("analyze", f.common.seed, echo);
    doc["graph"] = to_json(stats);
    Json communities = Json::array();
    for (std::size_t k = 0; k < p.community_count(); ++k) {
      communities.push_back({{"name", p.names()[k]},
                             {"size", p.sizes()[k]},
                             {"role", result.best.is_core(k) ? "core" : "periphery"}});
    }
    doc["partition"] = {{"source", part.source},
                        {"K", p.community_count()},
                        {"communities", std::move(communities)}};
    doc["connectivity"] = to_json(theta);
    doc["search"] = to_json(result);
    doc["search"]["settings"] = to_json(cfg);
    Json nodes = Json::array();
    for (NodeId v = 0; v < g.node_count(); ++v) {
      nodes.push_back({{"node", g.label(v)},
                       {"community", p.names()[p.community_of(v)]},
                       {"role", labels[v] ? "core" : "periphery"}});
    }
    doc["nodes"] = std::move(nodes);
    doc["leaders"] = leaders_json(g, p, leaders, result.best);
    doc["leader_summary"] = to_json(summary);
    if (ba) doc["evaluation"] = {{"truth", f.truth}, {"ba", *ba}, {"f1", *f1}};
    write_json(os, std::move(doc), f.common);
    return;
  }

  write_text_header(os, "analyze", f.common, echo);
  os << "\ngraph: nodes=" << stats.node_count << " edges=" << stats.edge_count
     << " density=" << fmt(stats.density) << " mean_degree=" << fmt(stats.mean_degree)
     << " mean_betweenness=" << fmt(stats.mean_betweenness)
     << " transitivity=" << fmt(stats.transitivity) << '\n';
  if (stats.group_by) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& gr : stats.groups) {
      rows.push_back({gr.value, std::to_string(gr.node_count), std::to_string(gr.edge_count),
                      fmt(gr.density), fmt(gr.mean_degree), fmt(gr.mean_betweenness)});
    }
    os << "\nby " << *stats.group_by << ":\n";
    print_table(os, {"value", "nodes", "edges", "density", "mean_degree", "mean_betweenness"},
                rows);
  }
  os << "\npartition: source=" << part.source << " K=" << p.community_count() << '\n';
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < p.community_count(); ++k) {
    rows.push_back({p.names()[k], std::to_string(p.sizes()[k]),
                    result.best.is_core(k) ? "core" : "periphery"});
  }
  print_table(os, {"community", "size", "role"}, rows);

  const auto& b = result.breakdown;
  const bool mean = b.kind == ObjectiveKind::mean;
  os << "\nsearch: mode=" << to_string(result.mode_used) << " evaluations=" << result.evaluations
     << " assignment=" << result.best.to_string() << " core=" << result.best.core_count()
     << " periphery=" << result.best.periphery_count() << '\n';
  os << "objective (" << to_string(b.kind) << "): " << fmt(b.value) << '\n';
  print_table(os, {"side", "density", mean ? "mean" : "median", mean ? "sd" : "iqr", "nonzero",
                   "pairs"},
              {{"core", fmt(b.core_density), fmt(b.core_center), fmt(b.core_spread),
                std::to_string(b.core_set_size), std::to_string(b.core_pairs)},
               {"periphery", fmt(b.periphery_density), fmt(b.periphery_center),
                fmt(b.periphery_spread), std::to_string(b.periphery_set_size),
                std::to_string(b.periphery_pairs)}});
  if (result.ties.size() > 1) {
    os << "ties:";
    for (const auto& z : result.ties) os << ' ' << z.to_string();
    os << '\n';
  }
  if (ba) os << "\nevaluation vs " << f.truth << ": ba=" << fmt(*ba) << " f1=" << fmt(*f1) << '\n';

  os << "\nleaders:\n";
  rows.clear();
  for (const auto& l : leaders) {
    rows.push_back({p.names()[l.community], result.best.is_core(l.community) ? "core" : "periphery",
                    std::to_string(l.rank), g.label(l.node),
                    std::to_string(l.inter_community_degree), std::to_string(l.degree),
                    fmt(l.betweenness)});
  }
  print_table(os, {"community", "role", "rank", "node", "inter", "degree", "betweenness"}, rows);

  os << "\nnodes:\n";
  rows.clear();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    rows.push_back({g.label(v), p.names()[p.community_of(v)], labels[v] ? "core" : "periphery"});
  }
  print_table(os, {"node", "community", "role"}, rows);
}

// ---------------------------------------------------------------------------
// detect-communities

struct DetectFlags {
  Common common;
  GraphFlags graph;
  double resolution = 1.0;
};

void cmd_detect(const DetectFlags& f, const std::string& echo, std::ostream& out,
                std::ostream& err) {
  const Graph g = load_graph(f.graph, err);
  LouvainOptions opts;
  opts.seed = derive_seed(f.common.seed, kLouvainStream);
  opts.resolution = f.resolution;
  const auto result = louvain(g, opts);
  Sink sink(f.common.output, out);
  std::ostream& os = sink.get();
  write_text_header(os, "detect-communities", f.common, echo);
  os << "# communities " << result.partition.community_count() << '\n';
  os << "# modularity " << fmt(result.modularity_trace.empty() ? 0.0
                                                              : result.modularity_trace.back())
     << '\n';
  write_partition(result.partition, g, os);
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateFlags {
  Common common;
  SearchFlags search;
  std::vector<std::size_t> n{500, 1000};
  std::vector<std::size_t> k{10};
  std::vector<int> lambda{50, 75};
  std::vector<std::string> size_modes{"uniform", "dirichlet"};
  bool full_design = false;
  std::size_t replicates = 20;
  std::vector<std::string> detectors{"oracle", "louvain", "be"};
  std::size_t workers = 1;
  bool no_runtime = false;
  std::string summary;
  std::string study = "none";
  bool estimated = false;
};

GridSpec grid_spec(const SimulateFlags& f, const CLI::App& sub) {
  GridSpec spec;
  if (f.full_design) spec = GridSpec::full_design();
  if (!f.full_design || sub.count("--n") > 0) spec.n = f.n;
  if (!f.full_design || sub.count("--k") > 0) spec.k = f.k;
  if (!f.full_design || sub.count("--lambda") > 0) spec.lambda_pct = f.lambda;
  if (!f.full_design || sub.count("--size-modes") > 0) {
    spec.size_modes.clear();
    for (const auto& m : f.size_modes) spec.size_modes.push_back(parse_size_mode(m));
  }
  return spec;
}

void write_csv_field(std::ostream& os, double x) {
  const auto old = os.precision(std::numeric_limits<double>::max_digits10);
  os << x;
  os.precision(old);
}

void cmd_study(const SimulateFlags& f, const std::vector<Scenario>& grid,
               const std::string& echo, std::ostream& out) {
  BehaviorOptions opts;
  opts.objective = parse_objective_kind(f.search.objective);
  opts.use_estimated = f.estimated;
  opts.exhaustive_limit = f.search.cfg.exhaustive_threshold;
  opts.master_seed = f.common.seed;
  Sink sink(f.common.output, out);
  std::ostream& os = sink.get();
  const bool jsonl = f.common.format == "jsonl";
  if (jsonl) {
    os << meta_json("simulate", f.common.seed, echo).dump() << '\n';
  } else {
    write_text_header(os, "simulate --study objective", f.common, echo);
    os << "scenario_id,replicate,assignment,core_count,objective,ba,is_true\n";
  }
  Json summary = meta_json("simulate", f.common.seed, echo);
  summary["study"] = "objective";
  summary["scenarios"] = Json::array();
  for (const auto& s : grid) {
    const auto study = objective_behavior_study(s, f.replicates, opts);
    for (const auto& row : study.rows) {
      if (jsonl) {
        os << Json{{"scenario_id", s.id()},     {"replicate", row.replicate},
                   {"assignment", row.z.to_string()}, {"core_count", row.core_count},
                   {"objective", row.objective}, {"ba", row.ba},
                   {"is_true", row.is_true}}
                  .dump()
           << '\n';
      } else {
        os << s.id() << ',' << row.replicate << ',' << row.z.to_string() << ','
           << row.core_count << ',';
        write_csv_field(os, row.objective);
        os << ',';
        write_csv_field(os, row.ba);
        os << ',' << (row.is_true ? 1 : 0) << '\n';
      }
    }
    std::size_t hits = 0, admissible = 0;
    Json reps = Json::array();
    for (const auto& r : study.replicates) {
      hits += r.truth_is_argmax ? 1 : 0;
      admissible += r.truth_admissible ? 1 : 0;
      reps.push_back({{"truth", r.z_true.to_string()},
                      {"argmax", r.argmax.to_string()},
                      {"true_objective", r.truth_admissible ? Json(r.true_objective)
                                                            : Json(nullptr)},
                      {"max_objective", r.max_objective},
                      {"truth_is_argmax", r.truth_is_argmax},
                      {"argmax_distance", r.argmax_distance}});
    }
    Json cell = to_json(s);
    cell["replicates"] = study.replicates.size();
    cell["truth_admissible"] = admissible;
    cell["truth_is_argmax"] = hits;
    cell["per_replicate"] = std::move(reps);
    summary["scenarios"].push_back(std::move(cell));
  }
  if (!f.summary.empty()) {
    Sink summary_sink(f.summary, out);
    write_json(summary_sink.get(), std::move(summary), f.common);
  }
}

void cmd_simulate(const SimulateFlags& f, const CLI::App& sub, const std::string& echo,
                  std::ostream& out, std::ostream& err) {
  const auto expansion = scenario_grid(grid_spec(f, sub));
  for (const auto& w : expansion.warnings) err << "warning: " << w << '\n';
  if (expansion.scenarios.empty()) throw InvalidArgument("scenario grid is empty");
  if (f.study == "objective") {
    cmd_study(f, expansion.scenarios, echo, out);
    return;
  }

  std::vector<Detector> detectors;
  for (const auto& d : f.detectors) {
    const auto kind = parse_detector_kind(d);
    if (kind == DetectorKind::external) {
      throw InvalidArgument("the external detector is only available through the library");
    }
    detectors.push_back(Detector{kind, {}});
  }
  const auto cfg = f.search.resolve(0);

  Sink sink(f.common.output, out);
  std::ostream& os = sink.get();
  const bool jsonl = f.common.format == "jsonl";
  if (jsonl) {
    os << meta_json("simulate", f.common.seed, echo).dump() << '\n';
  } else {
    write_text_header(os, "simulate", f.common, echo);
    write_record_header(os);
  }
  SweepOptions opts;
  opts.master_seed = f.common.seed;
  opts.workers = f.workers;
  opts.measure_runtime = !f.no_runtime;
  opts.on_record = [&](const EvalRecord& r) {
    if (jsonl) {
      os << to_json(r).dump() << '\n';
    } else {
      write_record(os, r);
    }
  };
  const auto records = run_sweep(expansion.scenarios, f.replicates, detectors, cfg, opts);
  os.flush();

  std::size_t failures = 0;
  for (const auto& r : records) failures += r.error.empty() ? 0 : 1;
  if (failures > 0) err << "note: " << failures << " record(s) failed and were written as NA\n";

  if (!f.summary.empty()) {
    Json summary = meta_json("simulate", f.common.seed, echo);
    summary["replicates"] = f.replicates;
    summary["excluded_scenarios"] = expansion.excluded;
    summary["cells"] = Json::array();
    for (const auto& c : summarize(records)) summary["cells"].push_back(to_json(c));
    Sink summary_sink(f.summary, out);
    write_json(summary_sink.get(), std::move(summary), f.common);
  }
}

// ---------------------------------------------------------------------------
// baseline

struct BaselineFlags {
  Common common;
  GraphFlags graph;
  SearchFlags search;
  std::string compare;
};

struct Comparison {
  std::vector<std::uint8_t> reference;
  double ba = 0.0;
  double f1 = 0.0;
  std::size_t agreement = 0;
};

std::vector<std::uint8_t> roles_from_report(const std::string& path, const Graph& g) {
  auto in = open_input(path, "analyze report");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DataError("analyze report '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw DataError("analyze report '" + path + "' has no node labels (use --format json)");
  }
  std::vector<int> roles(g.node_count(), -1);
  for (const auto& n : doc["nodes"]) {
    const auto label = n.at("node").get<std::string>();
    const auto v = g.find(label);
    if (!v) throw DataError("analyze report names unknown node '" + label + "'");
    roles[*v] = n.at("role").get<std::string>() == "core" ? 1 : 0;
  }
  std::vector<std::uint8_t> out(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (roles[v] < 0) throw DataError("analyze report has no label for node '" + g.label(v) + "'");
    out[v] = static_cast<std::uint8_t>(roles[v]);
  }
  return out;
}

void cmd_baseline(const BaselineFlags& f, const std::string& echo, std::ostream& out,
                  std::ostream& err) {
  const Graph g = load_graph(f.graph, err);
  const auto cfg = f.search.resolve(derive_seed(f.common.seed, kBaselineStream));
  const auto fit = be_fit(g, cfg);
  const auto table = degree_table(g, fit.core);
  std::optional<Comparison> cmp;
  if (!f.compare.empty()) {
    Comparison c;
    c.reference = roles_from_report(f.compare, g);
    c.ba = balanced_accuracy(fit.core, c.reference);
    c.f1 = f1_score(fit.core, c.reference);
    for (NodeId v = 0; v < g.node_count(); ++v) c.agreement += fit.core[v] == c.reference[v];
    cmp = std::move(c);
  }
  const auto core_size = static_cast<std::size_t>(std::count(fit.core.begin(), fit.core.end(), 1));

  Sink sink(f.common.output, out);
  std::ostream& os = sink.get();
  if (f.common.format == "json") {
    Json doc = meta_json("baseline", f.common.seed, echo);
    Json core = Json::array();
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (fit.core[v]) core.push_back(g.label(v));
    }
    doc["fit"] = {{"correlation", fit.correlation},
                  {"core_size", core_size},
                  {"periphery_size", g.node_count() - core_size},
                  {"core", std::move(core)},
                  {"mode_used", std::string(to_string(fit.mode_used))},
                  {"evaluations", fit.evaluations},
                  {"degenerate", fit.degenerate},
                  {"settings", to_json(fit.settings)}};
    doc["degree_table"] = {to_json(table[0]), to_json(table[1])};
    if (cmp) {
      Json nodes = Json::array();
      for (NodeId v = 0; v < g.node_count(); ++v) {
        nodes.push_back({{"node", g.label(v)},
                         {"community_level", cmp->reference[v] ? "core" : "periphery"},
                         {"node_level", fit.core[v] ? "core" : "periphery"}});
      }
      doc["comparison"] = {{"reference", f.compare}, {"ba", cmp->ba},
                           {"f1", cmp->f1},          {"agreement", cmp->agreement},
                           {"nodes", std::move(nodes)}};
    }
    write_json(os, std::move(doc), f.common);
    return;
  }

  write_text_header(os, "baseline", f.common, echo);
  os << "\nfit: correlation=" << fmt(fit.correlation) << " core=" << core_size
     << " periphery=" << g.node_count() - core_size << " mode=" << to_string(fit.mode_used)
     << " evaluations=" << fit.evaluations << (fit.degenerate ? " degenerate" : "") << '\n';
  auto opt = [](const auto& x) { return x ? fmt(static_cast<double>(*x)) : std::string("NA"); };
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : table) {
    rows.push_back({r.cls, std::to_string(r.count), opt(r.mean), opt(r.sd), opt(r.median),
                    opt(r.min), opt(r.max)});
  }
  os << "\ndegree by class:\n";
  print_table(os, {"class", "count", "mean", "sd", "median", "min", "max"}, rows);
  if (cmp) {
    os << "\ncomparison with " << f.compare << ": ba=" << fmt(cmp->ba) << " f1=" << fmt(cmp->f1)
       << " agreement=" << cmp->agreement << '/' << g.node_count() << '\n';
  }
  rows.clear();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::vector<std::string> row{g.label(v), fit.core[v] ? "core" : "periphery"};
    if (cmp) row.push_back(cmp->reference[v] ? "core" : "periphery");
    rows.push_back(std::move(row));
  }
  os << "\nnodes:\n";
  if (cmp) {
    print_table(os, {"node", "node_level", "community_level"}, rows);
  } else {
    print_table(os, {"node", "node_level"}, rows);
  }
}

// ---------------------------------------------------------------------------
// leaders

struct LeadersFlags {
  Common common;
  GraphFlags graph;
  PartitionFlags partition;
  SearchFlags search;
  std::string assignment;
  std::vector<std::string> keys;
  std::size_t top = 3;
};

void cmd_leaders(const LeadersFlags& f, const std::string& echo, std::ostream& out,
                 std::ostream& err) {
  const Graph g = load_graph(f.graph, err);
  const auto part = resolve_partition(f.partition, g, f.common.seed);
  const Partition& p = part.partition;
  CpAssignment z;
  if (!f.assignment.empty()) {
    z = CpAssignment::parse(f.assignment);
    if (z.size() != p.community_count()) {
      throw InvalidArgument("assignment has " + std::to_string(z.size()) + " entries for " +
                            std::to_string(p.community_count()) + " communities");
    }
  } else {
    require_four_communities(p);
    const auto cfg = f.search.resolve(derive_seed(f.common.seed, kSearchStream));
    z = search(estimate_connectivity(g, p), cfg).best;
  }
  const auto bc = betweenness(g);
  const auto leaders = find_leaders(g, p, f.top, bc);
  const auto summary = leader_summary(g, leaders, z, f.keys);

  Sink sink(f.common.output, out);
  std::ostream& os = sink.get();
  if (f.common.format == "json") {
    Json doc = meta_json("leaders", f.common.seed, echo);
    doc["partition_source"] = part.source;
    doc["assignment"] = z.to_string();
    doc["leaders"] = leaders_json(g, p, leaders, z);
    doc["summary"] = to_json(summary);
    write_json(os, std::move(doc), f.common);
    return;
  }
  write_text_header(os, "leaders", f.common, echo);
  os << "# assignment " << z.to_string() << '\n';
  os << "community\trole\trank\tnode\tinter_community_degree\tdegree\tbetweenness\n";
  for (const auto& l : leaders) {
    os << p.names()[l.community] << '\t' << (z.is_core(l.community) ? "core" : "periphery")
       << '\t' << l.rank << '\t' << g.label(l.node) << '\t' << l.inter_community_degree << '\t'
       << l.degree << '\t' << fmt(l.betweenness) << '\n';
  }
  for (const auto& [key, values] : summary.counts) {
    os << "\n# " << key << " (core/periphery leaders)\n";
    for (const auto& [value, c] : values) os << "# " << value << '\t' << c[0] << '\t' << c[1] << '\n';
  }
}

// ---------------------------------------------------------------------------
// gen

struct GenFlags {
  std::uint64_t seed = 1;
  std::size_t n = 500;
  std::size_t k = 10;
  int lambda = 50;
  std::string size_mode = "uniform";
  std::size_t replicate = 0;
  std::string out_dir;
};

void cmd_gen(const GenFlags& f, const std::string& echo, std::ostream& out) {
  Scenario s{f.n, f.k, f.lambda, parse_size_mode(f.size_mode), 0};
  s.validate();
  s.replicate_seed = replicate_seed(f.seed, s, f.replicate);
  const auto net = generate_network(s);
  namespace fs = std::filesystem;
  const fs::path dir(f.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create '" + f.out_dir + "': " + ec.message());

  auto write = [&](const char* name, const auto& body) {
    Sink sink((dir / name).string(), out);
    body(sink.get());
  };
  write("edges.tsv", [&](std::ostream& os) { write_edge_list(net.graph, os); });
  write("partition.csv",
        [&](std::ostream& os) { write_partition(net.truth.partition, net.graph, os); });
  write("truth.csv", [&](std::ostream& os) {
    os << "node,core\n";
    for (NodeId v = 0; v < net.graph.node_count(); ++v) {
      os << net.graph.label(v) << ',' << static_cast<int>(net.truth.node_labels[v]) << '\n';
    }
  });
  write("theta.csv", [&](std::ostream& os) { write_connectivity(net.truth.theta_gen, os); });
  write("scenario.json", [&](std::ostream& os) {
    Json doc = meta_json("gen", f.seed, echo);
    doc["scenario"] = to_json(s);
    doc["replicate"] = f.replicate;
    doc["replicate_seed"] = s.replicate_seed;
    doc["z_true"] = net.truth.z_true.to_string();
    doc["proportions"] = net.truth.proportions;
    doc["nodes"] = net.graph.node_count();
    doc["edges"] = net.graph.edge_count();
    os << doc.dump(2) << '\n';
  });
  out << "wrote " << s.id() << " replicate " << f.replicate << " (" << net.graph.edge_count()
      << " edges, z=" << net.truth.z_true.to_string() << ") to " << f.out_dir << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Community-level core-periphery detection", "commcp"};
  app.set_version_flag("--version", std::string("commcp ") + kVersion);
  app.set_config("--config", "", "Read options from an INI file");
  app.require_subcommand(1);

  AnalyzeFlags analyze;
  auto* a = app.add_subcommand("analyze", "Detect core and periphery communities in a network");
  add_common(a, analyze.common, {"table", "json"});
  add_graph(a, analyze.graph);
  add_partition(a, analyze.partition);
  add_search(a, analyze.search);
  a->add_option("--truth", analyze.truth, "Reference node roles (node,core) for BA/F1");
  a->add_option("--group-by", analyze.group_by, "Attribute for per-group statistics");
  a->add_option("--leader-keys", analyze.leader_keys, "Attributes tallied over leaders")
      ->delimiter(',');
  a->add_option("--top", analyze.top, "Leaders per community")->capture_default_str();

  DetectFlags detect;
  auto* d = app.add_subcommand("detect-communities", "Louvain partition written as node,community");
  add_common(d, detect.common, {"csv"});
  add_graph(d, detect.graph);
  d->add_option("--resolution", detect.resolution, "Louvain resolution")->capture_default_str();

  SimulateFlags sim;
  auto* s = app.add_subcommand("simulate", "Monte Carlo recovery sweep on planted networks");
  add_common(s, sim.common, {"csv", "jsonl"});
  add_search(s, sim.search);
  s->add_option("--n", sim.n, "Network sizes")->delimiter(',')->capture_default_str();
  s->add_option("--k", sim.k, "Community counts")->delimiter(',')->capture_default_str();
  s->add_option("--lambda", sim.lambda, "Core percentages")
      ->delimiter(',')
      ->capture_default_str();
  s->add_option("--size-modes", sim.size_modes, "uniform and/or dirichlet")
      ->delimiter(',')
      ->check(CLI::IsMember({"uniform", "dirichlet"}))
      ->capture_default_str();
  s->add_flag("--full-design", sim.full_design, "Start from the full published grid");
  s->add_option("--replicates", sim.replicates, "Replicates per scenario")
      ->capture_default_str();
  s->add_option("--detectors", sim.detectors, "oracle, louvain and/or be")
      ->delimiter(',')
      ->check(CLI::IsMember({"oracle", "louvain", "be"}))
      ->capture_default_str();
  s->add_option("--workers", sim.workers, "Worker threads")
      ->envname("COMMCP_WORKERS")
      ->check(CLI::PositiveNumber)
      ->configurable(false)
      ->capture_default_str();
  s->add_flag("--no-runtime", sim.no_runtime, "Write runtime_ms as 0 for byte-stable output");
  s->add_option("--summary", sim.summary, "Write a JSON summary to this path");
  s->add_option("--study", sim.study, "Run a study instead of the sweep")
      ->check(CLI::IsMember({"none", "objective"}))
      ->capture_default_str();
  s->add_flag("--estimated", sim.estimated,
              "Objective study: score the estimated instead of the generating matrix");

  BaselineFlags base;
  auto* b = app.add_subcommand("baseline", "Node-level core-periphery fit");
  add_common(b, base.common, {"table", "json"});
  add_graph(b, base.graph);
  add_search(b, base.search, false);
  b->add_option("--compare", base.compare, "Analyze report (JSON) to compare node roles with");

  LeadersFlags lead;
  auto* l = app.add_subcommand("leaders", "Top members of each community by external ties");
  add_common(l, lead.common, {"tsv", "json"});
  add_graph(l, lead.graph);
  add_partition(l, lead.partition);
  add_search(l, lead.search);
  l->add_option("--assignment", lead.assignment, "Community roles as a 0/1 string");
  l->add_option("--keys", lead.keys, "Attributes tallied over leaders")->delimiter(',');
  l->add_option("--top", lead.top, "Leaders per community")->capture_default_str();

  GenFlags gen;
  auto* gcmd = app.add_subcommand("gen", "Export one planted network and its ground truth");
  gcmd->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  gcmd->add_option("--n", gen.n, "Nodes")->capture_default_str();
  gcmd->add_option("--k", gen.k, "Communities")->capture_default_str();
  gcmd->add_option("--lambda", gen.lambda, "Core percentage")->capture_default_str();
  gcmd->add_option("--size-mode", gen.size_mode, "uniform or dirichlet")
      ->check(CLI::IsMember({"uniform", "dirichlet"}))
      ->capture_default_str();
  gcmd->add_option("--replicate", gen.replicate, "Replicate index")->capture_default_str();
  gcmd->add_option("--out-dir", gen.out_dir, "Destination directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  // An empty list echoes as "" and reads back as one empty entry.
  auto drop_empty = [](std::vector<std::string>& v) {
    v.erase(std::remove(v.begin(), v.end(), std::string()), v.end());
  };
  drop_empty(analyze.leader_keys);
  drop_empty(lead.keys);

  try {
    CLI::App* active = app.get_subcommands().front();
    const std::string echo = config_echo(*active);
    if (a->parsed()) {
      cmd_analyze(analyze, echo, out, err);
    } else if (d->parsed()) {
      cmd_detect(detect, echo, out, err);
    } else if (s->parsed()) {
      cmd_simulate(sim, *s, echo, out, err);
    } else if (b->parsed()) {
      cmd_baseline(base, echo, out, err);
    } else if (l->parsed()) {
      cmd_leaders(lead, echo, out, err);
    } else if (gcmd->parsed()) {
      cmd_gen(gen, echo, out);
    }
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace commcp::cli
