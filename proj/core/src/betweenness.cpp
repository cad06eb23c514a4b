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

#include <queue>
#include <vector>

#include "commcp/graph.hpp"

namespace commcp {

std::vector<double> betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> centrality(n, 0.0);
  std::vector<std::vector<NodeId>> predecessors(n);
  std::vector<double> sigma(n);
  std::vector<long> dist(n);
  std::vector<double> delta(n);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    for (std::size_t v = 0; v < n; ++v) {
      predecessors[v].clear();
      sigma[v] = 0.0;
      dist[v] = -1;
      delta[v] = 0.0;
    }
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<NodeId> queue;
    queue.push(s);
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop();
      order.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          predecessors[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : predecessors[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) centrality[w] += delta[w];
    }
  }
  // Each unordered pair was visited from both endpoints.
  for (double& c : centrality) c /= 2.0;
  return centrality;
}

}  // namespace commcp
