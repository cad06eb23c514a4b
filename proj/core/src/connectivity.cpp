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

#include "commcp/connectivity.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>

#include "commcp/error.hpp"
#include "commcp/text_table.hpp"

namespace commcp {

ConnectivityMatrix ConnectivityMatrix::permuted(
    std::span<const std::size_t> perm) const {
  if (perm.size() != k_) throw InvalidArgument("permutation length does not match K");
  ConnectivityMatrix out = *this;
  for (std::size_t k = 0; k < k_; ++k) {
    for (std::size_t l = 0; l < k_; ++l) {
      out.theta_[perm[k] * k_ + perm[l]] = theta_[k * k_ + l];
      if (!counts_.empty()) out.counts_[perm[k] * k_ + perm[l]] = counts_[k * k_ + l];
    }
    if (!sizes_.empty()) out.sizes_[perm[k]] = sizes_[k];
    out.names_[perm[k]] = names_[k];
  }
  return out;
}

ConnectivityMatrix estimate_connectivity(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count()) {
    throw InvalidArgument("partition covers " + std::to_string(p.node_count()) +
                          " nodes but the graph has " +
                          std::to_string(g.node_count()));
  }
  const std::size_t k = p.community_count();
  if (k < 2) {
    throw InfeasibleError("connectivity needs at least two communities, got " +
                          std::to_string(k));
  }
  ConnectivityMatrix m;
  m.k_ = k;
  m.theta_.assign(k * k, 0.0);
  m.counts_.assign(k * k, 0);
  m.sizes_.assign(p.sizes().begin(), p.sizes().end());
  m.names_ = p.names();
  for (const auto& e : g.edges()) {
    const std::size_t a = p.community_of(e.u);
    const std::size_t b = p.community_of(e.v);
    if (a == b) continue;
    ++m.counts_[a * k + b];
    ++m.counts_[b * k + a];
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      m.theta_[a * k + b] = static_cast<double>(m.counts_[a * k + b]) /
                            (static_cast<double>(m.sizes_[a]) *
                             static_cast<double>(m.sizes_[b]));
    }
  }
  return m;
}

ConnectivityMatrix connectivity_from_matrix(std::span<const double> row_major,
                                            std::size_t k,
                                            std::vector<std::string> names) {
  if (row_major.size() != k * k) {
    throw DataError("matrix has " + std::to_string(row_major.size()) +
                    " entries, expected " + std::to_string(k * k));
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const double x = row_major[a * k + b];
      const std::string where =
          "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
        throw DataError("entry " + where + " is outside [0, 1]");
      }
      if (a == b && x != 0.0) throw DataError("diagonal entry " + where + " is nonzero");
      if (std::abs(x - row_major[b * k + a]) > 1e-9) {
        throw DataError("matrix is not symmetric at " + where);
      }
    }
  }
  if (names.empty()) {
    for (std::size_t c = 0; c < k; ++c) names.push_back(std::to_string(c));
  } else if (names.size() != k) {
    throw DataError("name count does not match K");
  }
  ConnectivityMatrix m;
  m.k_ = k;
  m.theta_.assign(row_major.begin(), row_major.end());
  m.names_ = std::move(names);
  return m;
}

ConnectivityMatrix connectivity_from_rows(
    const std::vector<std::vector<double>>& rows) {
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw DataError("matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return connectivity_from_matrix(flat, rows.size());
}

void write_connectivity(const ConnectivityMatrix& theta, std::ostream& out) {
  const std::size_t k = theta.size();
  for (std::size_t c = 0; c < k; ++c) out << (c ? "," : "") << theta.names()[c];
  out << '\n';
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) out << (b ? "," : "") << theta(a, b);
    out << '\n';
  }
  out.precision(old_precision);
}

ConnectivityMatrix read_connectivity(std::istream& in) {
  const auto table = text::read_table(in);
  const std::size_t k = table.header.size();
  if (table.rows.size() != k) {
    throw DataError("expected " + std::to_string(k) + " matrix rows, got " +
                    std::to_string(table.rows.size()));
  }
  std::vector<double> flat;
  flat.reserve(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (const auto& field : table.rows[r]) {
      double x = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
      if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw DataError("line " + std::to_string(table.line_numbers[r]) +
                        ": not a number: '" + field + "'");
      }
      flat.push_back(x);
    }
  }
  return connectivity_from_matrix(flat, k, table.header);
}

}  // namespace commcp
