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

#include "evtail/sample.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "evtail/error.hpp"
#include "evtail/kernels.hpp"

namespace evtail {

SampleData SampleData::from_values(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kInvalidInput, "sample must contain at least one value");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kInvalidInput,
                  "sample value at position " + std::to_string(i + 1) +
                      " is not finite");
    }
  }
  std::sort(values.begin(), values.end());
  return SampleData(std::move(values));
}

SampleData SampleData::from_sorted(std::vector<double> values) {
  assert(!values.empty());
  assert(std::is_sorted(values.begin(), values.end()));
  return SampleData(std::move(values));
}

SampleData SampleData::shifted(double shift) const {
  std::vector<double> out(values_.size());
  kernels::active().subtract(values_.data(), values_.size(), shift, out.data());
  return SampleData(std::move(out));
}

SampleData SampleData::scaled(double a) const {
  if (!(a > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "scale factor must be positive");
  }
  std::vector<double> out(values_);
  for (double& v : out) v *= a;
  return SampleData(std::move(out));
}

std::size_t SampleData::first_exceedance(double t, bool inclusive) const noexcept {
  const auto it = inclusive
                      ? std::lower_bound(values_.begin(), values_.end(), t)
                      : std::upper_bound(values_.begin(), values_.end(), t);
  return static_cast<std::size_t>(it - values_.begin());
}

SampleData SampleData::excesses_over(double t, bool inclusive) const {
  const std::size_t first = first_exceedance(t, inclusive);
  if (first == values_.size()) {
    throw Error(ErrorCode::kInsufficientTail,
                "no observations exceed the threshold " + std::to_string(t));
  }
  std::vector<double> out(values_.size() - first);
  kernels::active().subtract(values_.data() + first, out.size(), t, out.data());
  return SampleData(std::move(out));
}

}  // namespace evtail
