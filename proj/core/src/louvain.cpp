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
#include <map>
#include <numeric>

#include "commcp/partition.hpp"
#include "commcp/rng.hpp"

namespace commcp {
namespace {

// Weighted graph of super-nodes. `loops[i]` is twice the weight of edges
// folded inside super-node i, so strength[i] = loops[i] + sum of arc weights.
struct WeightedGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> arcs;
  std::vector<double> loops;
  std::vector<double> strength;
  double total = 0.0;  // 2m

  std::size_t size() const { return arcs.size(); }
};

WeightedGraph from_graph(const Graph& g) {
  WeightedGraph w;
  w.arcs.resize(g.node_count());
  w.loops.assign(g.node_count(), 0.0);
  w.strength.assign(g.node_count(), 0.0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (NodeId u : g.neighbors(v)) w.arcs[v].emplace_back(u, 1.0);
    w.strength[v] = static_cast<double>(g.degree(v));
  }
  w.total = 2.0 * static_cast<double>(g.edge_count());
  return w;
}

double weighted_modularity(const WeightedGraph& w,
                           const std::vector<std::size_t>& community,
                           double resolution) {
  const std::size_t k = *std::max_element(community.begin(), community.end()) + 1;
  std::vector<double> internal(k, 0.0), tot(k, 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    internal[community[i]] += w.loops[i];
    tot[community[i]] += w.strength[i];
    for (auto [j, wt] : w.arcs[i]) {
      if (community[j] == community[i]) internal[community[i]] += wt;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    q += internal[c] / w.total - resolution * (tot[c] / w.total) * (tot[c] / w.total);
  }
  return q;
}

// One local-move phase. Returns true if any node changed community.
bool move_nodes(const WeightedGraph& w, std::vector<std::size_t>& community,
                double resolution, Rng& rng, std::size_t max_sweeps) {
  const std::size_t n = w.size();
  std::vector<double> tot(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) tot[community[i]] += w.strength[i];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> touched;
  bool any_move = false;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    bool moved = false;
    for (std::size_t i : order) {
      const std::size_t own = community[i];
      const double ki = w.strength[i];
      touched.clear();
      for (auto [j, wt] : w.arcs[i]) {
        const std::size_t c = community[j];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += wt;
      }
      tot[own] -= ki;
      const double scale = resolution * ki / w.total;
      const double stay_gain = link[own] - scale * tot[own];
      // Ascending scan keeps the lowest index among equal gains.
      std::sort(touched.begin(), touched.end());
      std::size_t candidate = own;
      double candidate_gain = 0.0;
      for (std::size_t c : touched) {
        if (c == own) continue;
        const double gain = link[c] - scale * tot[c];
        if (candidate == own || gain > candidate_gain + 1e-12) {
          candidate = c;
          candidate_gain = gain;
        }
      }
      const std::size_t best =
          candidate != own && candidate_gain > stay_gain + 1e-12 ? candidate : own;
      tot[best] += ki;
      if (best != own) {
        community[i] = best;
        moved = true;
        any_move = true;
      }
      for (std::size_t c : touched) link[c] = 0.0;
    }
    if (!moved) break;
  }
  return any_move;
}

// Renumbers communities densely in order of first appearance.
std::size_t compact(std::vector<std::size_t>& community) {
  std::map<std::size_t, std::size_t> remap;
  for (auto& c : community) {
    auto [it, inserted] = remap.emplace(c, remap.size());
    c = it->second;
  }
  return remap.size();
}

WeightedGraph aggregate(const WeightedGraph& w,
                        const std::vector<std::size_t>& community,
                        std::size_t k) {
  WeightedGraph out;
  out.arcs.resize(k);
  out.loops.assign(k, 0.0);
  out.strength.assign(k, 0.0);
  out.total = w.total;
  std::vector<std::map<std::size_t, double>> acc(k);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t ci = community[i];
    out.loops[ci] += w.loops[i];
    out.strength[ci] += w.strength[i];
    for (auto [j, wt] : w.arcs[i]) {
      const std::size_t cj = community[j];
      if (cj == ci) {
        out.loops[ci] += wt;
      } else {
        acc[ci][cj] += wt;
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (auto [d, wt] : acc[c]) out.arcs[c].emplace_back(d, wt);
  }
  return out;
}

}  // namespace

LouvainResult louvain(const Graph& g, const LouvainOptions& options) {
  LouvainResult result;
  const std::size_t n = g.node_count();
  std::vector<CommunityId> assignment(n);
  std::iota(assignment.begin(), assignment.end(), CommunityId{0});
  if (g.edge_count() == 0) {
    result.partition = Partition::from_assignment(std::move(assignment));
    result.modularity_trace.push_back(0.0);
    return result;
  }

  Rng rng(options.seed);
  WeightedGraph w = from_graph(g);
  std::vector<std::size_t> node_to_super(n);
  std::iota(node_to_super.begin(), node_to_super.end(), std::size_t{0});

  while (true) {
    std::vector<std::size_t> community(w.size());
    std::iota(community.begin(), community.end(), std::size_t{0});
    const bool moved =
        move_nodes(w, community, options.resolution, rng, options.max_sweeps);
    result.modularity_trace.push_back(
        weighted_modularity(w, community, options.resolution));
    ++result.levels;
    if (!moved) break;
    const std::size_t k = compact(community);
    for (auto& s : node_to_super) s = community[s];
    w = aggregate(w, community, k);
  }

  std::vector<std::size_t> final_ids(node_to_super);
  compact(final_ids);
  for (std::size_t v = 0; v < n; ++v) {
    assignment[v] = static_cast<CommunityId>(final_ids[v]);
  }
  result.partition = Partition::from_assignment(std::move(assignment));
  return result;
}

Partition louvain_partition(const Graph& g, std::uint64_t seed) {
  return louvain(g, LouvainOptions{.seed = seed}).partition;
}

}  // namespace commcp
