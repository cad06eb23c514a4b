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

#ifndef COMMCP_SUMMARY_STATS_HPP_
#define COMMCP_SUMMARY_STATS_HPP_

#include <span>
#include <vector>

namespace commcp::stats {

// All functions return 0 on empty input.
double mean(std::span<const double> xs);

// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_sd(std::span<const double> xs);

// Linear-interpolation quantile on sorted data (Hyndman-Fan type 7, the R and
// NumPy default). `sorted` must be ascending.
double quantile_sorted(std::span<const double> sorted, double p);

double median(std::vector<double> xs);

// Q3 - Q1 with type-7 quantiles.
double iqr(std::vector<double> xs);

}  // namespace commcp::stats

#endif  // COMMCP_SUMMARY_STATS_HPP_
