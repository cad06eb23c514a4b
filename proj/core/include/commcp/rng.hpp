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

#ifndef COMMCP_RNG_HPP_
#define COMMCP_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace commcp {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// Counter-based seed derivation: the stream for (master, a, b) does not
// depend on how many other streams were derived or in which order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                          std::uint64_t b = 0);

// FNV-1a, used to key seed streams by stable string ids.
std::uint64_t stable_hash(std::string_view text);

}  // namespace commcp

#endif  // COMMCP_RNG_HPP_
