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

#include "evtail/gpd.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "evtail/error.hpp"

namespace evtail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool near_zero(double xi) { return std::abs(xi) < kXiZeroCutoff; }

}  // namespace

GpdParams::GpdParams(double xi, double psi) : xi_(xi), psi_(psi) {
  if (!std::isfinite(xi) || !std::isfinite(psi) || !(psi > 0.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "GPD requires finite xi and psi > 0 (got xi=" +
                    std::to_string(xi) + ", psi=" + std::to_string(psi) + ")");
  }
}

double GpdParams::support_end() const noexcept {
  return xi_ >= 0.0 ? kInf : psi_ / -xi_;
}

double gpd_cdf(const GpdParams& params, double x) {
  if (!(x > 0.0)) return 0.0;
  if (x >= params.support_end()) return 1.0;
  const double xi = params.xi();
  const double psi = params.psi();
  if (near_zero(xi)) return -std::expm1(-x / psi);
  return -std::expm1(-std::log1p(xi * x / psi) / xi);
}

double gpd_pdf(const GpdParams& params, double x) {
  if (x < 0.0 || x >= params.support_end()) return 0.0;
  const double xi = params.xi();
  const double psi = params.psi();
  if (near_zero(xi)) return std::exp(-x / psi) / psi;
  return std::exp(-(1.0 / xi + 1.0) * std::log1p(xi * x / psi)) / psi;
}

double gpd_quantile(const GpdParams& params, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput,
                "quantile probability must lie in [0, 1]");
  }
  const double xi = params.xi();
  const double psi = params.psi();
  if (p == 1.0) {
    if (xi >= 0.0) {
      throw Error(ErrorCode::kUnboundedQuantile,
                  "quantile at p=1 is unbounded for xi >= 0");
    }
    return params.support_end();
  }
  if (near_zero(xi)) return -psi * std::log1p(-p);
  return psi * std::expm1(-xi * std::log1p(-p)) / xi;
}

std::vector<double> gpd_from_uniforms(const GpdParams& params,
                                      std::span<const double> uniforms) {
  std::vector<double> out;
  out.reserve(uniforms.size());
  for (double u : uniforms) out.push_back(gpd_quantile(params, u));
  return out;
}

SampleData gpd_sample(const GpdParams& params, std::size_t n, RandomStream& rng) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidInput, "sample size must be at least 1");
  }
  const double xi = params.xi();
  const double psi = params.psi();
  std::vector<double> out(n);
  if (near_zero(xi)) {
    for (double& v : out) v = -psi * std::log1p(-rng.uniform());
  } else {
    for (double& v : out) v = psi * std::expm1(-xi * std::log1p(-rng.uniform())) / xi;
  }
  return SampleData::from_values(std::move(out));
}

GpdParams residual_params(const GpdParams& params, double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "threshold must be non-negative");
  }
  if (t >= params.support_end()) {
    throw Error(ErrorCode::kEmptyTail,
                "threshold " + std::to_string(t) +
                    " is at or beyond the support end " +
                    std::to_string(params.support_end()));
  }
  return GpdParams(params.xi(), params.psi() + params.xi() * t);
}

double cv_of_xi(double xi) {
  if (!(xi < 0.5)) {
    throw Error(ErrorCode::kUndefinedCv,
                "residual CV is undefined for xi >= 0.5 (infinite variance)");
  }
  return std::sqrt(1.0 / (1.0 - 2.0 * xi));
}

double xi_of_cv(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::kInvalidInput, "coefficient of variation must be > 0");
  }
  const double c2 = c * c;
  return (c2 - 1.0) / (2.0 * c2);
}

double asymptotic_sd(double xi) {
  if (!(xi < 0.25)) {
    throw Error(ErrorCode::kOutOfDomain,
                "residual CV is not asymptotically normal for xi >= 0.25");
  }
  const double a = 1.0 - xi;
  const double b = 1.0 - 2.0 * xi;
  const double var = a * a * (6.0 * xi * xi - xi + 1.0) /
                     (b * b * (1.0 - 3.0 * xi) * (1.0 - 4.0 * xi));
  return std::sqrt(var);
}

double cv_covariance(double xi, double psi, double s, double t) {
  if (!(xi < 0.25)) {
    throw Error(ErrorCode::kOutOfDomain,
                "CV covariance is undefined for xi >= 0.25");
  }
  const GpdParams params(xi, psi);
  if (!(s >= 0.0) || !(t >= 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "thresholds must be non-negative");
  }
  if (s >= params.support_end() || t >= params.support_end()) {
    throw Error(ErrorCode::kInvalidInput, "thresholds must lie inside the support");
  }
  if (s > t) std::swap(s, t);
  if (near_zero(xi)) return std::exp(s / psi);

  const double xi2 = xi * xi;
  const double xi3 = xi2 * xi;
  const double xi4 = xi3 * xi;
  const double psi2 = psi * psi;
  const double poly = 6.0 * xi4 * t * t + 12.0 * psi * xi3 * t +
                      8.0 * xi3 * s * t - 9.0 * xi3 * t * t + 6.0 * psi2 * xi2 +
                      8.0 * psi * xi2 * s - 10.0 * psi * xi2 * t -
                      2.0 * xi2 * s * t + 3.0 * xi2 * t * t - psi2 * xi -
                      2.0 * psi * xi * s + 4.0 * psi * xi * t + psi2;
  const double base = psi + xi * s;
  const double growth = std::exp(std::log1p(xi * s / psi) / xi);
  const double one_minus_2xi = 1.0 - 2.0 * xi;
  const double denom = (1.0 - 3.0 * xi) * one_minus_2xi * one_minus_2xi *
                       (1.0 - 4.0 * xi) * base * base;
  return growth * (1.0 - xi) * (1.0 - xi) * poly / denom;
}

double gpd_log_likelihood(const GpdParams& params, std::span<const double> x) {
  const double xi = params.xi();
  const double psi = params.psi();
  const double log_psi = std::log(psi);
  double ll = 0.0;
  if (near_zero(xi)) {
    for (double v : x) {
      if (v < 0.0) return -kInf;
      ll -= log_psi + v / psi;
    }
    return ll;
  }
  const double k = 1.0 / xi + 1.0;
  for (double v : x) {
    if (v < 0.0) return -kInf;
    const double a = xi * v / psi;
    if (!(a > -1.0)) return -kInf;
    ll -= log_psi + k * std::log1p(a);
  }
  return ll;
}

}  // namespace evtail
