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

#include <cstdlib>
#include <string_view>
#include <vector>

#include "internal.hpp"

namespace evtail::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

namespace {

std::vector<const KernelTable*> detect() {
  std::vector<const KernelTable*> tables{&detail::kScalarTable};
  if (const KernelTable* t = detail::avx2_table()) tables.push_back(t);
  if (const KernelTable* t = detail::neon_table()) tables.push_back(t);
  return tables;
}

const std::vector<const KernelTable*>& tables() {
  static const std::vector<const KernelTable*> kTables = detect();
  return kTables;
}

}  // namespace

std::span<const KernelTable* const> available() { return tables(); }

const KernelTable& scalar_table() { return detail::kScalarTable; }

const KernelTable& active() {
  static const KernelTable& kActive = []() -> const KernelTable& {
    const char* forced = std::getenv("EVTAIL_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
      return detail::kScalarTable;
    }
    return *tables().back();
  }();
  return kActive;
}

}  // namespace evtail::kernels
