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

#ifndef COMMCP_CONNECTIVITY_HPP_
#define COMMCP_CONNECTIVITY_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "commcp/graph.hpp"
#include "commcp/partition.hpp"

namespace commcp {

// Symmetric K x K matrix of inter-community edge densities with a zero
// diagonal. When estimated from a graph it also carries the raw inter-edge
// counts and community sizes.
class ConnectivityMatrix {
 public:
  ConnectivityMatrix() = default;

  std::size_t size() const { return k_; }
  double operator()(std::size_t k, std::size_t l) const { return theta_[k * k_ + l]; }

  bool has_counts() const { return !counts_.empty(); }
  std::uint64_t edge_count(std::size_t k, std::size_t l) const {
    return counts_.at(k * k_ + l);
  }
  // Empty when built from a bare matrix.
  std::span<const std::size_t> community_sizes() const { return sizes_; }
  const std::vector<std::string>& names() const { return names_; }

  // Row-major copy of the matrix.
  std::vector<double> values() const { return theta_; }

  // Community k moves to index perm[k].
  ConnectivityMatrix permuted(std::span<const std::size_t> perm) const;

  friend ConnectivityMatrix estimate_connectivity(const Graph&, const Partition&);
  friend ConnectivityMatrix connectivity_from_matrix(std::span<const double>,
                                                     std::size_t,
                                                     std::vector<std::string>);

 private:
  std::size_t k_ = 0;
  std::vector<double> theta_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::size_t> sizes_;
  std::vector<std::string> names_;
};

// theta(k,l) = m_kl / (n_k n_l) for k != l, where m_kl counts edges with one
// endpoint in each community; intra-community edges are ignored. Single pass
// over the edge list. Throws InfeasibleError if K < 2 and InvalidArgument if
// the partition does not cover the graph.
ConnectivityMatrix estimate_connectivity(const Graph& g, const Partition& p);

// Validates and stores a row-major K x K matrix verbatim: symmetric within
// 1e-9, entries in [0, 1], zero diagonal. Throws DataError otherwise.
ConnectivityMatrix connectivity_from_matrix(std::span<const double> row_major,
                                            std::size_t k,
                                            std::vector<std::string> names = {});

ConnectivityMatrix connectivity_from_rows(
    const std::vector<std::vector<double>>& rows);

// Header row of community names, then K rows of K values. Values are written
// with round-trip precision.
void write_connectivity(const ConnectivityMatrix& theta, std::ostream& out);
ConnectivityMatrix read_connectivity(std::istream& in);

}  // namespace commcp

#endif  // COMMCP_CONNECTIVITY_HPP_
