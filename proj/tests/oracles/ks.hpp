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

#ifndef EVTAIL_TESTS_ORACLES_KS_HPP_
#define EVTAIL_TESTS_ORACLES_KS_HPP_

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace evtail::oracle {

// sup_x |F_n(x) - F(x)| for a continuous F.
template <typename Cdf>
double ks_distance(std::span<const double> values, Cdf cdf) {
  std::vector<double> x(values.begin(), values.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

// Two-sample statistic sup_x |F_a(x) - F_b(x)|.
inline double ks_two_sample(std::span<const double> a_in, std::span<const double> b_in) {
  std::vector<double> a(a_in.begin(), a_in.end());
  std::vector<double> b(b_in.begin(), b_in.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace evtail::oracle

#endif  // EVTAIL_TESTS_ORACLES_KS_HPP_
