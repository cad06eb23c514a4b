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

#include "commcp/text_table.hpp"

#include "commcp/error.hpp"

namespace commcp::text {

Delimiter detect_delimiter(std::string_view line) {
  if (line.find('\t') != std::string_view::npos) return Delimiter::tab;
  if (line.find(',') != std::string_view::npos) return Delimiter::comma;
  return Delimiter::whitespace;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view line, Delimiter delim) {
  std::vector<std::string> out;
  if (delim == Delimiter::whitespace) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() &&
             (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
        ++i;
      }
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '\r') {
        ++j;
      }
      out.emplace_back(line.substr(i, j - i));
      i = j;
    }
    return out;
  }
  const char sep = delim == Delimiter::tab ? '\t' : ',';
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_blank_or_comment(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

Table read_table(std::istream& in) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Delimiter delim = Delimiter::comma;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    if (!have_header) {
      delim = detect_delimiter(line);
      table.header = split(trim(line), delim);
      have_header = true;
      continue;
    }
    auto fields = split(trim(line), delim);
    if (fields.size() != table.header.size()) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(table.header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(line_no);
  }
  if (!have_header) throw DataError("table is empty (no header line)");
  return table;
}

}  // namespace commcp::text
