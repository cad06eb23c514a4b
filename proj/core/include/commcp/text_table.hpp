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

#ifndef COMMCP_TEXT_TABLE_HPP_
#define COMMCP_TEXT_TABLE_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace commcp::text {

// Delimiter used to split a line. `whitespace` means runs of spaces/tabs.
enum class Delimiter { tab, comma, whitespace };

// Picks tab if the line contains one, then comma, then whitespace.
Delimiter detect_delimiter(std::string_view line);

std::vector<std::string> split(std::string_view line, Delimiter delim);

std::string_view trim(std::string_view s);

// Comment lines start with '#' after leading whitespace.
bool is_blank_or_comment(std::string_view line);

// A header-led delimited table (CSV/TSV). Rows keep their 1-based source
// line numbers for error reporting.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
};

// Reads a table whose first non-comment line is the header. Every row must
// have exactly header.size() fields; throws DataError naming the line
// otherwise.
Table read_table(std::istream& in);

}  // namespace commcp::text

#endif  // COMMCP_TEXT_TABLE_HPP_
