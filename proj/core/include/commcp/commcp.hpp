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

#ifndef COMMCP_COMMCP_HPP_
#define COMMCP_COMMCP_HPP_

#include "commcp/assignment.hpp"
#include "commcp/baseline.hpp"
#include "commcp/connectivity.hpp"
#include "commcp/error.hpp"
#include "commcp/evaluation.hpp"
#include "commcp/genetic.hpp"
#include "commcp/graph.hpp"
#include "commcp/leaders.hpp"
#include "commcp/objective.hpp"
#include "commcp/partition.hpp"
#include "commcp/rng.hpp"
#include "commcp/search.hpp"
#include "commcp/simgen.hpp"
#include "commcp/summary_stats.hpp"
#include "commcp/text_table.hpp"

namespace commcp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace commcp

#endif  // COMMCP_COMMCP_HPP_
