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

#include "evtail/residual_cv.hpp"

#include <gsl/gsl_cdf.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

#include "evtail/error.hpp"
#include "evtail/gpd.hpp"
#include "evtail/kernels.hpp"

namespace evtail {

ResidualMoments residual_moments(const SampleData& sample, double t,
                                 bool inclusive) {
  const std::size_t first = sample.first_exceedance(t, inclusive);
  const std::size_t count = sample.size() - first;
  if (count < 2) {
    throw Error(ErrorCode::kInsufficientTail,
                "residual CV needs at least 2 exceedances of threshold " +
                    std::to_string(t) + " (found " + std::to_string(count) + ")");
  }
  const auto& k = kernels::active();
  const double* x = sample.values().data() + first;
  const double mean = k.sum_excess(x, count, t) / static_cast<double>(count);
  if (!(mean > 0.0)) {
    throw Error(ErrorCode::kDegenerateTail,
                "all exceedances of threshold " + std::to_string(t) +
                    " equal the threshold (zero mean excess)");
  }
  const double ss = k.sum_sq_dev_excess(x, count, t, mean);
  return {count, mean, std::sqrt(ss / static_cast<double>(count - 1))};
}

double residual_cv(const SampleData& sample, double t, bool inclusive) {
  return residual_moments(sample, t, inclusive).cv();
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "normal quantile needs p in (0, 1)");
  }
  return gsl_cdf_ugaussian_Pinv(p);
}

Band cv_band(double xi_ref, std::size_t n_exceed, double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "confidence level must lie in (0, 1)");
  }
  const double z = normal_quantile(0.5 * (1.0 + level));
  const double half = z * asymptotic_sd(xi_ref) /
                      std::sqrt(static_cast<double>(n_exceed));
  const double c = cv_of_xi(xi_ref);
  return {c - half, c + half};
}

namespace {

// Calls fn(k, t, n_exceed, moments) for every distinct order statistic
// leaving at least min_tail exceedances, in increasing t.
template <typename Fn>
void for_each_threshold(const SampleData& sample, std::size_t min_tail,
                        bool inclusive, Fn&& fn) {
  const std::size_t n = sample.size();
  if (min_tail >= n) {
    throw Error(ErrorCode::kInsufficientTail,
                "sample of size " + std::to_string(n) +
                    " leaves no threshold with at least " +
                    std::to_string(min_tail) + " exceedances");
  }
  const std::size_t floor_tail = std::max<std::size_t>(min_tail, 2);
  const auto x = sample.values();
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && x[i] == x[i - 1]) continue;
    const double t = x[i];
    const std::size_t first = inclusive ? i : sample.first_exceedance(t, false);
    const std::size_t n_exceed = n - first;
    if (n_exceed < floor_tail) break;
    ResidualMoments m;
    try {
      m = residual_moments(sample, t, inclusive);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDegenerateTail) continue;
      throw;
    }
    fn(i + 1, t, n_exceed, m);
  }
}

}  // namespace

CvPlot cv_plot(const SampleData& sample, std::size_t min_tail,
               std::optional<double> xi_ref, double level, bool inclusive) {
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "confidence level must lie in (0, 1)");
  }
  CvPlot plot;
  plot.level = level;
  plot.reference_xi = xi_ref;
  const bool with_bands = xi_ref.has_value() && *xi_ref < 0.25;
  if (xi_ref.has_value() && *xi_ref < 0.5) plot.reference_cv = cv_of_xi(*xi_ref);

  for_each_threshold(sample, min_tail, inclusive,
                     [&](std::size_t k, double t, std::size_t n_exceed,
                         const ResidualMoments& m) {
                       CvPoint p{k, t, n_exceed, m.cv(), std::nullopt};
                       if (with_bands) p.band = cv_band(*xi_ref, n_exceed, level);
                       plot.points.push_back(p);
                     });
  if (plot.points.empty()) {
    throw Error(ErrorCode::kInsufficientTail, "CV plot has no points");
  }
  return plot;
}

std::vector<MeanExcessPoint> mean_excess_plot(const SampleData& sample,
                                              std::size_t min_tail,
                                              bool inclusive) {
  std::vector<MeanExcessPoint> out;
  for_each_threshold(sample, min_tail, inclusive,
                     [&](std::size_t k, double t, std::size_t n_exceed,
                         const ResidualMoments& m) {
                       out.push_back({k, t, n_exceed, m.mean});
                     });
  if (out.empty()) {
    throw Error(ErrorCode::kInsufficientTail, "mean excess plot has no points");
  }
  return out;
}

double empirical_quantile(const SampleData& sample, double p,
                          QuantileMethod method) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "quantile probability must lie in [0, 1]");
  }
  const auto x = sample.values();
  const std::size_t n = x.size();
  switch (method) {
    case QuantileMethod::kLowerStep: {
      // n p can land a few ulps above an integer; the fuzz keeps exact
      // multiples on the lower order statistic.
      const double np = static_cast<double>(n) * p;
      const double j = std::ceil(np - 4.0 * DBL_EPSILON * std::max(np, 1.0));
      const std::size_t idx =
          std::clamp<std::size_t>(static_cast<std::size_t>(std::max(j, 1.0)), 1, n);
      return x[idx - 1];
    }
    case QuantileMethod::kInterpolated: {
      const double index = 1.0 + static_cast<double>(n - 1) * p;
      const double lo = std::floor(index);
      const double hi = std::ceil(index);
      const double q_lo = x[static_cast<std::size_t>(lo) - 1];
      const double q_hi = x[static_cast<std::size_t>(hi) - 1];
      if (index > lo && q_hi != q_lo) {
        const double h = index - lo;
        return (1.0 - h) * q_lo + h * q_hi;
      }
      return q_lo;
    }
  }
  return x[0];
}

}  // namespace evtail
