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

#ifndef EVTAIL_SAMPLE_HPP_
#define EVTAIL_SAMPLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace evtail {

// A non-empty set of finite observations kept in ascending order. All
// statistics in the library read order statistics directly from here.
class SampleData {
 public:
  // Sorts the input. Throws Error(kInvalidInput) on an empty input or any
  // NaN/infinite entry.
  static SampleData from_values(std::vector<double> values);

  // Trusts the caller that `values` is already sorted and finite; checked
  // only in debug builds. Used on hot simulation paths.
  static SampleData from_sorted(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

  // Values x - shift, still sorted.
  SampleData shifted(double shift) const;
  // Values a * x for a > 0.
  SampleData scaled(double a) const;
  // Excesses x - t of the exceedances. With `inclusive` the exceedances are
  // x >= t, otherwise x > t. Throws kInsufficientTail when none remain.
  SampleData excesses_over(double t, bool inclusive) const;
  // Index of the first exceedance of t under the given convention.
  std::size_t first_exceedance(double t, bool inclusive) const noexcept;

 private:
  explicit SampleData(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_;
};

}  // namespace evtail

#endif  // EVTAIL_SAMPLE_HPP_
