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

// Generalized Pareto distribution GPD(xi, psi) on (0, sigma):
//
//   F(x) = 1 - (1 + xi x / psi)^(-1/xi),   F(x) = 1 - exp(-x / psi) at xi = 0,
//
// with sigma = +inf for xi >= 0 and sigma = psi / |xi| for xi < 0. Excesses of
// a GPD over any threshold are again GPD with the same shape, and for
// xi < 1/2 their coefficient of variation is the constant
// c_xi = sqrt(1 / (1 - 2 xi)); the functions below expose that bijection and
// the asymptotic law of its empirical counterpart.

#ifndef EVTAIL_GPD_HPP_
#define EVTAIL_GPD_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "evtail/random.hpp"
#include "evtail/sample.hpp"

namespace evtail {

// Below this |xi| the exponential-limit formulas are used.
inline constexpr double kXiZeroCutoff = 1e-8;

class GpdParams {
 public:
  // Throws Error(kInvalidParams) unless psi > 0 and both values are finite.
  GpdParams(double xi, double psi);

  double xi() const noexcept { return xi_; }
  double psi() const noexcept { return psi_; }
  // Upper end of the support: +inf when xi >= 0.
  double support_end() const noexcept;

  friend bool operator==(const GpdParams&, const GpdParams&) = default;

 private:
  double xi_;
  double psi_;
};

struct StdErrors {
  double xi;
  double psi;
};

struct FitResult {
  GpdParams params;
  // Present only when the fit converged with xi > -0.5, where the MLE has its
  // usual asymptotic behaviour.
  std::optional<StdErrors> std_errors;
  double log_likelihood;
  bool converged;
};

double gpd_cdf(const GpdParams& params, double x);
double gpd_pdf(const GpdParams& params, double x);

// Throws kInvalidInput for p outside [0, 1] and kUnboundedQuantile for p = 1
// when xi >= 0.
double gpd_quantile(const GpdParams& params, double p);

// Inverse-CDF sampling: one uniform per draw, in stream order.
SampleData gpd_sample(const GpdParams& params, std::size_t n, RandomStream& rng);

// Maps given uniforms in (0, 1) through the quantile function. Unsorted
// output, same order as the input.
std::vector<double> gpd_from_uniforms(const GpdParams& params,
                                      std::span<const double> uniforms);

// Distribution of X - t given X > t. Throws kEmptyTail when t is at or past
// the support end, kInvalidInput when t < 0.
GpdParams residual_params(const GpdParams& params, double t);

// c_xi = sqrt(1 / (1 - 2 xi)); throws kUndefinedCv for xi >= 0.5.
double cv_of_xi(double xi);

// Inverse of cv_of_xi: xi = (c^2 - 1) / (2 c^2); throws kInvalidInput for
// c <= 0.
double xi_of_cv(double c);

// Standard deviation of the limiting normal law of sqrt(n) (cv - c_xi):
//
//   sigma_xi^2 = (1 - xi)^2 (6 xi^2 - xi + 1)
//                / ((1 - 2 xi)^2 (1 - 3 xi) (1 - 4 xi)).
//
// Throws kOutOfDomain for xi >= 0.25.
double asymptotic_sd(double xi);

// Covariance function of the Gaussian limit of sqrt(n) (cv_n(t) - c_xi)
// viewed as a process in the threshold. Symmetric in (s, t); equals
// asymptotic_sd(xi)^2 at s = t = 0. Throws kOutOfDomain for xi >= 0.25 and
// kInvalidInput for negative or out-of-support thresholds.
double cv_covariance(double xi, double psi, double s, double t);

// Sum of log densities; -infinity when any value lies outside the support.
double gpd_log_likelihood(const GpdParams& params, std::span<const double> x);

// Maximum likelihood over (xi, log psi) by multi-start Nelder-Mead.
// Requires at least two distinct non-negative values (kFitFailure or
// kInvalidInput otherwise).
FitResult gpd_mle_fit(const SampleData& sample);

}  // namespace evtail

#endif  // EVTAIL_GPD_HPP_
