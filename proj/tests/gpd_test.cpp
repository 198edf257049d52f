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
#include <limits>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "evtail/error.hpp"
#include "evtail/gpd.hpp"
#include "oracles/ks.hpp"

namespace evtail {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no evtail::Error thrown";
  return ErrorCode::kIo;
}

TEST(GpdParams, Validation) {
  EXPECT_EQ(code_of([] { GpdParams(0.1, 0.0); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([] { GpdParams(0.1, -1.0); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([] { GpdParams(std::nan(""), 1.0); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(GpdParams(-0.5, 1.0).support_end(), 2.0);
  EXPECT_TRUE(std::isinf(GpdParams(0.0, 1.0).support_end()));
}

TEST(GpdCdf, Examples) {
  EXPECT_NEAR(gpd_cdf(GpdParams(1, 1), 1.0), 0.5, 1e-15);
  EXPECT_NEAR(gpd_cdf(GpdParams(0, 2), 2.0 * std::log(2.0)), 0.5, 1e-15);
  EXPECT_EQ(gpd_cdf(GpdParams(-0.5, 1), 2.0), 1.0);
  EXPECT_EQ(gpd_cdf(GpdParams(-0.5, 1), 3.0), 1.0);
  EXPECT_EQ(gpd_cdf(GpdParams(0.3, 1), -1.0), 0.0);
}

TEST(GpdCdf, ContinuousAtZeroShape) {
  const double x = 1.7;
  const double f0 = gpd_cdf(GpdParams(0.0, 1.3), x);
  EXPECT_NEAR(gpd_cdf(GpdParams(1e-9, 1.3), x), f0, 1e-12);
  EXPECT_NEAR(gpd_cdf(GpdParams(-1e-7, 1.3), x), f0, 1e-6);
  EXPECT_NEAR(gpd_cdf(GpdParams(1e-7, 1.3), x), f0, 1e-6);
}

TEST(GpdQuantile, Examples) {
  EXPECT_NEAR(gpd_quantile(GpdParams(1, 1), 0.5), 1.0, 1e-15);
  EXPECT_NEAR(gpd_quantile(GpdParams(0, 1), 1.0 - std::exp(-1.0)), 1.0, 1e-15);
  EXPECT_NEAR(gpd_quantile(GpdParams(-1, 3), 1.0 - 1e-12), 3.0, 1e-9);
  EXPECT_EQ(gpd_quantile(GpdParams(-1, 3), 1.0), 3.0);
  EXPECT_EQ(gpd_quantile(GpdParams(0.2, 3), 0.0), 0.0);
  EXPECT_EQ(code_of([] { gpd_quantile(GpdParams(0.2, 1), 1.0); }),
            ErrorCode::kUnboundedQuantile);
  EXPECT_EQ(code_of([] { gpd_quantile(GpdParams(0.0, 1), 1.0); }),
            ErrorCode::kUnboundedQuantile);
  EXPECT_EQ(code_of([] { gpd_quantile(GpdParams(0.2, 1), 1.5); }), ErrorCode::kInvalidInput);
}

TEST(GpdPdf, MatchesDerivativeOfCdf) {
  for (double xi : {-0.4, 0.0, 0.5}) {
    const GpdParams g(xi, 2.0);
    for (double x : {0.1, 1.0, 3.0}) {
      const double h = 1e-6;
      const double num = (gpd_cdf(g, x + h) - gpd_cdf(g, x - h)) / (2 * h);
      EXPECT_NEAR(gpd_pdf(g, x), num, 1e-7) << xi << " " << x;
    }
  }
  EXPECT_EQ(gpd_pdf(GpdParams(-0.5, 1), 2.5), 0.0);
}

TEST(GpdSample, ExponentialKs) {
  RandomStream rng(2024);
  const SampleData s = gpd_sample(GpdParams(0, 1), 100000, rng);
  const double d = oracle::ks_distance(s.values(), [](double x) { return -std::expm1(-x); });
  EXPECT_LT(d, 0.01);
}

TEST(GpdSample, SingleDrawIsQuantileOfUniform) {
  const GpdParams g(0.3, 2.0);
  RandomStream probe(99);
  const double u = probe.uniform();
  RandomStream rng(99);
  const SampleData s = gpd_sample(g, 1, rng);
  EXPECT_EQ(s[0], gpd_quantile(g, u));
  const std::vector<double> half{0.5};
  EXPECT_EQ(gpd_from_uniforms(g, half)[0], gpd_quantile(g, 0.5));
}

TEST(GpdSample, MeanOfHeavyTail) {
  RandomStream rng(5);
  const SampleData s = gpd_sample(GpdParams(0.5, 7), 100000, rng);
  double sum = 0.0;
  for (double v : s.values()) sum += v;
  EXPECT_NEAR(sum / s.size(), 14.0, 0.7);
}

TEST(ResidualParams, Examples) {
  EXPECT_EQ(residual_params(GpdParams(0.5, 7), 10), GpdParams(0.5, 12));
  EXPECT_EQ(residual_params(GpdParams(0, 3), 5), GpdParams(0, 3));
  EXPECT_EQ(residual_params(GpdParams(-0.5, 1), 1), GpdParams(-0.5, 0.5));
  EXPECT_EQ(code_of([] { residual_params(GpdParams(-0.5, 1), 2); }), ErrorCode::kEmptyTail);
  EXPECT_EQ(code_of([] { residual_params(GpdParams(-0.5, 1), 2.5); }), ErrorCode::kEmptyTail);
}

TEST(CvOfXi, AnchorsAndErrors) {
  EXPECT_EQ(cv_of_xi(0), 1.0);
  EXPECT_NEAR(cv_of_xi(-1), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(cv_of_xi(-0.5), 0.70711, 5e-6);
  EXPECT_EQ(code_of([] { cv_of_xi(0.5); }), ErrorCode::kUndefinedCv);
  EXPECT_EQ(code_of([] { cv_of_xi(0.7); }), ErrorCode::kUndefinedCv);
}

TEST(XiOfCv, Examples) {
  // (0.697^2 - 1) / (2 * 0.697^2) = -0.52921...; -0.53 to two decimals.
  EXPECT_NEAR(xi_of_cv(0.697), -0.52921106854751576, 1e-15);
  EXPECT_NEAR(xi_of_cv(0.697), -0.53, 0.005);
  EXPECT_EQ(xi_of_cv(1.0), 0.0);
  EXPECT_NEAR(xi_of_cv(std::sqrt(1 / 0.6)), 0.2, 1e-14);
  EXPECT_EQ(code_of([] { xi_of_cv(0.0); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { xi_of_cv(-1.0); }), ErrorCode::kInvalidInput);
}

TEST(AsymptoticSd, Examples) {
  EXPECT_EQ(asymptotic_sd(0), 1.0);
  EXPECT_NEAR(asymptotic_sd(-1), std::sqrt(8.0 / 45.0), 1e-15);
  EXPECT_NEAR(asymptotic_sd(0.2), 4.8074017006186523908, 1e-12);
  EXPECT_EQ(code_of([] { asymptotic_sd(0.25); }), ErrorCode::kOutOfDomain);
}

TEST(CvCovariance, Examples) {
  EXPECT_NEAR(cv_covariance(0, 1, 1, 2), std::numbers::e, 1e-14);
  EXPECT_NEAR(cv_covariance(-1, 1, 0, 0), 8.0 / 45.0, 1e-15);
  // Independent multi-precision evaluation of the closed form.
  EXPECT_NEAR(cv_covariance(0.1, 2, 1, 3), 6.2668515214611694336, 1e-12);
  EXPECT_NEAR(cv_covariance(-0.3, 1.5, 0.4, 1.2), 0.13002454702407530899, 1e-13);
  EXPECT_EQ(code_of([] { cv_covariance(0.3, 1, 0, 0); }), ErrorCode::kOutOfDomain);
  EXPECT_EQ(code_of([] { cv_covariance(-0.5, 1, 0, 3); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { cv_covariance(0.1, 1, -1, 0); }), ErrorCode::kInvalidInput);
}

TEST(CvCovariance, SymmetricExactly) {
  for (double xi : {-0.7, -0.2, 0.0, 0.15}) {
    for (double s : {0.0, 0.3, 1.1}) {
      for (double t : {0.2, 0.9}) {
        EXPECT_EQ(cv_covariance(xi, 1.3, s, t), cv_covariance(xi, 1.3, t, s));
      }
    }
  }
}

TEST(CvCovariance, DiagonalAtZeroIsAsymptoticVariance) {
  for (double xi : {-1.0, -0.5, -0.1, 0.0, 0.1, 0.2}) {
    for (double psi : {0.5, 1.0, 3.0}) {
      const double sd = asymptotic_sd(xi);
      EXPECT_NEAR(cv_covariance(xi, psi, 0, 0), sd * sd, 1e-9) << xi << " " << psi;
    }
  }
}

TEST(CvCovariance, ContinuousAtZeroShape) {
  const double e = cv_covariance(0.0, 1.0, 0.5, 1.0);
  EXPECT_NEAR(cv_covariance(1e-6, 1.0, 0.5, 1.0), e, 1e-4);
  EXPECT_NEAR(cv_covariance(-1e-6, 1.0, 0.5, 1.0), e, 1e-4);
}

TEST(LogLikelihood, Examples) {
  const std::vector<double> one{1.0};
  const std::vector<double> three{3.0};
  EXPECT_NEAR(gpd_log_likelihood(GpdParams(0, 1), one), -1.0, 1e-15);
  EXPECT_EQ(gpd_log_likelihood(GpdParams(-0.5, 1), three),
            -std::numeric_limits<double>::infinity());
  EXPECT_NEAR(gpd_log_likelihood(GpdParams(1, 1), one), -std::log(4.0), 1e-15);
}

}  // namespace
}  // namespace evtail
