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

#include <cmath>
#include <cstdio>
#include <ostream>

#include "cli.hpp"

namespace evtail::cli {
namespace {

void write_number(double v, std::ostream& out) {
  if (!std::isfinite(v)) {
    out << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

void write_value(const nlohmann::ordered_json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << nlohmann::json(key).dump() << ": ";
        write_value(item, out, indent + 2);
      }
      out << "\n" << close << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write_value(item, out, indent + 2);
      }
      out << "\n" << close << "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      write_number(v.get<double>(), out);
      return;
    default:
      out << v.dump();
  }
}

}  // namespace

void write_json(const nlohmann::ordered_json& value, std::ostream& out) {
  write_value(value, out, 0);
  out << "\n";
}

}  // namespace evtail::cli
