// Copyright 2026 The evtail Authors.
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

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "cli.hpp"
#include "evtail/error.hpp"

namespace evtail::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_value(std::string_view token, std::size_t line_no) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                       ": not a decimal number: '" +
                                       std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidInput, "line " + std::to_string(line_no) +
                                              ": value is not finite: '" +
                                              std::string(token) + "'");
  }
  return value;
}

}  // namespace

SampleData ingest_stream(std::istream& in, const std::optional<std::string>& column) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> col_index;
  bool header_pending = column.has_value();

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty()) continue;

    if (!column) {
      values.push_back(parse_value(view, line_no));
      continue;
    }
    const auto fields = split_csv(view);
    if (header_pending) {
      header_pending = false;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == *column) col_index = i;
      }
      if (!col_index) {
        std::size_t idx = 0;
        const auto [ptr, ec] = std::from_chars(
            column->data(), column->data() + column->size(), idx);
        if (ec != std::errc() || ptr != column->data() + column->size()) {
          throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                             ": header has no column '" + *column + "'");
        }
        col_index = idx;
      }
      continue;
    }
    if (*col_index >= fields.size()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected at least " +
                                         std::to_string(*col_index + 1) + " fields");
    }
    values.push_back(parse_value(fields[*col_index], line_no));
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error");
  if (values.empty()) throw Error(ErrorCode::kInvalidInput, "dataset is empty");
  return SampleData::from_values(std::move(values));
}

SampleData ingest(const std::string& path, const std::optional<std::string>& column) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open input file '" + path + "'");
  return ingest_stream(in, column);
}

}  // namespace evtail::cli
