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


#ifndef COMMCP_TESTS_FIXTURES_HPP_
#define COMMCP_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "commcp/commcp.hpp"
#include "oracles/oracles.hpp"

namespace fixtures {

// Parses an edge list given inline, e.g. "a b\nb c\n".
commcp::Graph graph_from_text(const std::string& text);

commcp::Graph graph_from_pairs(std::size_t n, const oracle::EdgeList& edges);
oracle::EdgeList pairs_of(const commcp::Graph& g);

commcp::Graph path(std::size_t n);
commcp::Graph complete(std::size_t n);
commcp::Graph star(std::size_t leaves);  // center is node 0

// Erdos-Renyi G(n, p).
commcp::Graph random_graph(std::size_t n, double p, commcp::Rng& rng);

// Uniform random assignment to k communities, each non-empty (n >= k).
std::vector<commcp::CommunityId> random_assignment(std::size_t n, std::size_t k,
                                                   commcp::Rng& rng);

// Symmetric zero-diagonal matrix; each off-diagonal entry is zero with
// probability `zero_prob`, else uniform on (0, 1].
oracle::Matrix random_theta(std::size_t k, double zero_prob, commcp::Rng& rng);

// Two-block matrix: core-core entries high, core-periphery medium,
// periphery-periphery low, each with multiplicative noise.
oracle::Matrix planted_theta(const std::vector<int>& z, commcp::Rng& rng);

commcp::ConnectivityMatrix to_connectivity(const oracle::Matrix& m);

std::vector<int> to_ints(const commcp::CpAssignment& z);
std::vector<int> to_ints(std::span<const commcp::CommunityId> xs);

// Random admissible z of length k.
std::vector<int> random_admissible(std::size_t k, commcp::Rng& rng);

}  // namespace fixtures

#endif  // COMMCP_TESTS_FIXTURES_HPP_
