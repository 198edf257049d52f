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

// Empirical residual statistics over a threshold t: the exceedances are the
// observations above t (x >= t by default, x > t when `inclusive` is false)
// and the excesses are x - t. The residual CV is sd/mean of the excesses with
// the n - 1 denominator in the standard deviation.

#ifndef EVTAIL_RESIDUAL_CV_HPP_
#define EVTAIL_RESIDUAL_CV_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "evtail/sample.hpp"

namespace evtail {

// Smallest exceedance count used for CV points unless the caller says
// otherwise.
inline constexpr std::size_t kDefaultMinTail = 8;

struct ResidualMoments {
  std::size_t count;
  double mean;
  double sd;
  double cv() const { return sd / mean; }
};

// Moments of the excesses over t. Throws kInsufficientTail for fewer than 2
// exceedances and kDegenerateTail when the mean excess is zero.
ResidualMoments residual_moments(const SampleData& sample, double t,
                                 bool inclusive = true);

double residual_cv(const SampleData& sample, double t, bool inclusive = true);

struct Band {
  double low;
  double high;
};

struct CvPoint {
  // 1-based rank of the threshold in the sample, i.e. t = x_(k).
  std::size_t k;
  double threshold;
  std::size_t n_exceed;
  double cv;
  std::optional<Band> band;
};

struct CvPlot {
  std::vector<CvPoint> points;
  // c_xi for the reference shape, when one was given and xi < 0.5.
  std::optional<double> reference_cv;
  std::optional<double> reference_xi;
  double level;
};

// One point per distinct order statistic t = x_(k) that leaves at least
// `min_tail` exceedances. With xi_ref < 0.25 each point carries the
// pointwise band c_xi -/+ z_{(1+level)/2} sigma_xi / sqrt(n(t)); for larger
// xi_ref the points come without bands. Throws kInsufficientTail when
// min_tail >= sample size or no point qualifies.
CvPlot cv_plot(const SampleData& sample, std::size_t min_tail,
               std::optional<double> xi_ref, double level,
               bool inclusive = true);

// Pointwise band for a single exceedance count.
Band cv_band(double xi_ref, std::size_t n_exceed, double level);

struct MeanExcessPoint {
  std::size_t k;
  double threshold;
  std::size_t n_exceed;
  double mean_excess;
};

std::vector<MeanExcessPoint> mean_excess_plot(const SampleData& sample,
                                              std::size_t min_tail,
                                              bool inclusive = true);

enum class QuantileMethod {
  // inf{x : F_n(x) >= p}
  kLowerStep,
  // Linear interpolation at h = (n - 1) p + 1 (R's default rule).
  kInterpolated,
};

double empirical_quantile(const SampleData& sample, double p,
                          QuantileMethod method);

// Standard normal quantile.
double normal_quantile(double p);

}  // namespace evtail

#endif  // EVTAIL_RESIDUAL_CV_HPP_
