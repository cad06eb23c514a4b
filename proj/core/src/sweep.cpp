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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <limits>
#include <mutex>
#include <thread>

#include "commcp/baseline.hpp"
#include "commcp/connectivity.hpp"
#include "commcp/error.hpp"
#include "commcp/evaluation.hpp"

namespace commcp {
namespace {

// Seed streams hanging off a replicate seed.
enum Stream : std::uint64_t { kSearch = 1, kLouvain = 2, kBaseline = 3 };

EvalRecord evaluate_detector(const Detector& detector, const Scenario& s,
                             std::size_t replicate, const GeneratedNetwork& net,
                             const SearchConfig& base_cfg, bool measure_runtime) {
  const auto start = std::chrono::steady_clock::now();
  EvalRecord rec;
  rec.scenario = s;
  rec.replicate = replicate;
  rec.detector = std::string(to_string(detector.kind));
  const auto& truth = net.truth;
  try {
    if (detector.kind == DetectorKind::baseline_be) {
      SearchConfig cfg = base_cfg;
      cfg.seed = derive_seed(s.replicate_seed, kBaseline);
      const auto fit = be_fit(net.graph, cfg);
      rec.estimated_k = 2;
      rec.ba = balanced_accuracy(fit.core, truth.node_labels);
      rec.f1 = f1_score(fit.core, truth.node_labels);
    } else {
      Partition partition;
      switch (detector.kind) {
        case DetectorKind::oracle:
          partition = truth.partition;
          break;
        case DetectorKind::louvain:
          partition = louvain_partition(net.graph, derive_seed(s.replicate_seed, kLouvain));
          break;
        case DetectorKind::external:
          if (!detector.external) {
            throw InvalidArgument("external detector has no partition source");
          }
          partition = detector.external(s, replicate, net.graph);
          break;
        case DetectorKind::baseline_be:
          break;
      }
      rec.estimated_k = partition.community_count();
      const auto theta = estimate_connectivity(net.graph, partition);
      SearchConfig cfg = base_cfg;
      cfg.seed = derive_seed(s.replicate_seed, kSearch);
      const auto result = search(theta, cfg);
      rec.z_detected = result.best;
      rec.phi_best = result.objective;
      const auto labels = expand_to_nodes(result.best, partition);
      rec.ba = balanced_accuracy(labels, truth.node_labels);
      rec.f1 = f1_score(labels, truth.node_labels);
    }
  } catch (const std::exception& e) {
    rec.ba.reset();
    rec.f1.reset();
    rec.phi_best.reset();
    rec.error = e.what();
  }
  if (measure_runtime) {
    rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return rec;
}

std::vector<EvalRecord> run_item(const Scenario& base, std::size_t replicate,
                                 std::span<const Detector> detectors,
                                 const SearchConfig& cfg, const SweepOptions& options) {
  Scenario s = base;
  s.replicate_seed = replicate_seed(options.master_seed, base, replicate);
  std::vector<EvalRecord> out;
  GeneratedNetwork net;
  try {
    net = generate_network(s);
  } catch (const std::exception& e) {
    for (const auto& d : detectors) {
      EvalRecord rec;
      rec.scenario = s;
      rec.replicate = replicate;
      rec.detector = std::string(to_string(d.kind));
      rec.error = e.what();
      out.push_back(std::move(rec));
    }
    return out;
  }
  for (const auto& d : detectors) {
    out.push_back(evaluate_detector(d, s, replicate, net, cfg, options.measure_runtime));
  }
  return out;
}

void write_double(std::ostream& out, const std::optional<double>& x) {
  if (!x) {
    out << "NA";
    return;
  }
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << *x;
  out.precision(old);
}

}  // namespace

std::vector<EvalRecord> run_sweep(std::span<const Scenario> grid, std::size_t replicates,
                                  std::span<const Detector> detectors,
                                  const SearchConfig& cfg, const SweepOptions& options) {
  if (grid.empty()) throw InvalidArgument("sweep grid is empty");
  if (replicates < 1) throw InvalidArgument("replicates must be >= 1");
  if (detectors.empty()) throw InvalidArgument("no detectors selected");
  validate(cfg);

  const std::size_t items = grid.size() * replicates;
  std::vector<std::vector<EvalRecord>> results(items);
  std::vector<char> done(items, 0);
  std::size_t next_emit = 0;
  std::mutex mu;
  std::atomic<std::size_t> next_item{0};

  auto worker = [&] {
    while (true) {
      const std::size_t item = next_item.fetch_add(1);
      if (item >= items) return;
      auto records = run_item(grid[item / replicates], item % replicates, detectors,
                              cfg, options);
      std::lock_guard lock(mu);
      results[item] = std::move(records);
      done[item] = 1;
      while (next_emit < items && done[next_emit]) {
        if (options.on_record) {
          for (const auto& r : results[next_emit]) options.on_record(r);
        }
        ++next_emit;
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, items);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<EvalRecord> all;
  all.reserve(items * detectors.size());
  for (auto& batch : results) {
    for (auto& r : batch) all.push_back(std::move(r));
  }
  return all;
}

void write_record_header(std::ostream& out) {
  out << "scenario_id,n,K,lambda,size_mode,detector,replicate,estimated_K,ba,f1,"
         "phi_best,runtime_ms\n";
}

void write_record(std::ostream& out, const EvalRecord& r) {
  const auto& s = r.scenario;
  out << s.id() << ',' << s.n << ',' << s.k << ',' << s.lambda_pct << ','
      << to_string(s.size_mode) << ',' << r.detector << ',' << r.replicate << ','
      << r.estimated_k << ',';
  write_double(out, r.ba);
  out << ',';
  write_double(out, r.f1);
  out << ',';
  write_double(out, r.phi_best);
  out << ',' << r.runtime_ms << '\n';
}

}  // namespace commcp
