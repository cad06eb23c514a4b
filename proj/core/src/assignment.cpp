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

#include "commcp/assignment.hpp"

#include <algorithm>

#include "commcp/error.hpp"

namespace commcp {

CpAssignment::CpAssignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw InvalidArgument("assignment entries must be 0 or 1");
  }
}

CpAssignment CpAssignment::from_mask(std::uint64_t mask, std::size_t k) {
  if (k > 64) throw InvalidArgument("mask encoding supports at most 64 communities");
  std::vector<std::uint8_t> bits(k);
  for (std::size_t i = 0; i < k; ++i) bits[i] = (mask >> i) & 1U;
  return CpAssignment(std::move(bits));
}

CpAssignment CpAssignment::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("assignment string may only contain 0 and 1");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return CpAssignment(std::move(bits));
}

std::size_t CpAssignment::core_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool CpAssignment::admissible(std::size_t min_per_side) const {
  return core_count() >= min_per_side && periphery_count() >= min_per_side;
}

CpAssignment CpAssignment::complement() const {
  std::vector<std::uint8_t> bits(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) bits[i] = 1 - bits_[i];
  return CpAssignment(std::move(bits));
}

CpAssignment CpAssignment::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != bits_.size()) {
    throw InvalidArgument("permutation length does not match assignment");
  }
  std::vector<std::uint8_t> bits(bits_.size());
  for (std::size_t k = 0; k < bits_.size(); ++k) bits[perm[k]] = bits_[k];
  return CpAssignment(std::move(bits));
}

std::uint64_t CpAssignment::mask() const {
  if (bits_.size() > 64) throw InvalidArgument("assignment too long for a mask");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) m |= std::uint64_t{bits_[i]} << i;
  return m;
}

std::string CpAssignment::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace commcp
