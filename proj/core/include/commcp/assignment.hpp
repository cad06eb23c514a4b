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

#ifndef COMMCP_ASSIGNMENT_HPP_
#define COMMCP_ASSIGNMENT_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace commcp {

// Binary core/periphery label per community: 1 = core, 0 = periphery.
class CpAssignment {
 public:
  CpAssignment() = default;
  // Throws InvalidArgument if any entry is not 0 or 1.
  explicit CpAssignment(std::vector<std::uint8_t> bits);

  // Bit k of `mask` is community k.
  static CpAssignment from_mask(std::uint64_t mask, std::size_t k);
  // Parses a string of '0'/'1' characters, community 0 first.
  static CpAssignment parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool is_core(std::size_t k) const { return bits_[k] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t core_count() const;
  std::size_t periphery_count() const { return size() - core_count(); }

  // At least `min_per_side` communities on each side.
  bool admissible(std::size_t min_per_side = 2) const;

  CpAssignment complement() const;
  // Community k moves to index perm[k].
  CpAssignment permuted(std::span<const std::size_t> perm) const;
  std::uint64_t mask() const;
  std::string to_string() const;

  // Lexicographic on the bit vector, community 0 most significant.
  auto operator<=>(const CpAssignment&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace commcp

#endif  // COMMCP_ASSIGNMENT_HPP_
