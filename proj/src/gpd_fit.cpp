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

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>

#include "evtail/error.hpp"
#include "evtail/gpd.hpp"

namespace evtail {

namespace {

// Finite stand-in for an infeasible point; the simplex only compares values.
constexpr double kPenalty = 1e100;
constexpr double kSimplexTol = 1e-10;
constexpr int kMaxIter = 4000;

struct Objective {
  std::span<const double> x;
};

// Negative log-likelihood in (xi, log psi). xi <= -1 is excluded: there the
// likelihood is unbounded as psi approaches -xi * max(x).
double neg_log_lik(const gsl_vector* v, void* data) {
  const auto* obj = static_cast<const Objective*>(data);
  const double xi = gsl_vector_get(v, 0);
  const double log_psi = gsl_vector_get(v, 1);
  if (!std::isfinite(xi) || !std::isfinite(log_psi) || xi <= -1.0 ||
      std::abs(log_psi) > 700.0) {
    return kPenalty;
  }
  const double ll = gpd_log_likelihood(GpdParams(xi, std::exp(log_psi)), obj->x);
  return std::isfinite(ll) ? -ll : kPenalty;
}

struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};
struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
using MinimizerPtr = std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter>;
using VectorPtr = std::unique_ptr<gsl_vector, VectorDeleter>;

struct SimplexRun {
  double xi;
  double log_psi;
  double value;
  bool converged;
};

SimplexRun run_simplex(Objective& obj, double xi0, double log_psi0, double step) {
  gsl_multimin_function fn{&neg_log_lik, 2, &obj};
  VectorPtr start(gsl_vector_alloc(2));
  VectorPtr steps(gsl_vector_alloc(2));
  gsl_vector_set(start.get(), 0, xi0);
  gsl_vector_set(start.get(), 1, log_psi0);
  gsl_vector_set_all(steps.get(), step);
  MinimizerPtr m(gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2));
  if (gsl_multimin_fminimizer_set(m.get(), &fn, start.get(), steps.get()) != GSL_SUCCESS) {
    return {xi0, log_psi0, kPenalty, false};
  }
  int status = GSL_CONTINUE;
  for (int iter = 0; iter < kMaxIter && status == GSL_CONTINUE; ++iter) {
    if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) break;
    status = gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), kSimplexTol);
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(m.get());
  return {gsl_vector_get(best, 0), gsl_vector_get(best, 1),
          gsl_multimin_fminimizer_minimum(m.get()), status == GSL_SUCCESS};
}

// Scale consistent with shape xi: matches the sample median, and keeps every
// observation inside the support when xi < 0.
double starting_log_psi(double xi, double median, double max) {
  double psi = std::abs(xi) < kXiZeroCutoff ? median / std::log(2.0)
                                            : median * xi / std::expm1(xi * std::log(2.0));
  if (xi < 0.0) psi = std::max(psi, -xi * max * 1.05);
  return std::log(psi);
}

std::optional<StdErrors> observed_information_se(std::span<const double> x,
                                                 double xi, double psi) {
  const auto nll = [&](double a, double b) {
    if (!(b > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return -gpd_log_likelihood(GpdParams(a, b), x);
  };
  const double h0 = 1e-4;
  const double h1 = 1e-4 * psi;
  const double f = nll(xi, psi);
  const double h00 = (nll(xi + h0, psi) - 2.0 * f + nll(xi - h0, psi)) / (h0 * h0);
  const double h11 = (nll(xi, psi + h1) - 2.0 * f + nll(xi, psi - h1)) / (h1 * h1);
  const double h01 = (nll(xi + h0, psi + h1) - nll(xi + h0, psi - h1) -
                      nll(xi - h0, psi + h1) + nll(xi - h0, psi - h1)) /
                     (4.0 * h0 * h1);
  const double det = h00 * h11 - h01 * h01;
  if (!std::isfinite(det) || !(det > 0.0) || !(h00 > 0.0)) return std::nullopt;
  return StdErrors{std::sqrt(h11 / det), std::sqrt(h00 / det)};
}

}  // namespace

FitResult gpd_mle_fit(const SampleData& sample) {
  const auto x = sample.values();
  if (x.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "GPD fit needs at least 2 observations");
  }
  if (sample.min() < 0.0) {
    throw Error(ErrorCode::kInvalidInput, "GPD fit needs non-negative observations");
  }
  if (sample.min() == sample.max()) {
    throw Error(ErrorCode::kFitFailure,
                "GPD fit needs at least two distinct values (sample is constant)");
  }

  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double cv = std::sqrt(ss / static_cast<double>(x.size() - 1)) / mean;
  const double median = x[x.size() / 2] > 0.0 ? x[x.size() / 2] : mean;
  const double xi_cv = xi_of_cv(cv);

  // gsl_multimin reports through return codes; its default handler aborts.
  gsl_error_handler_t* old_handler = gsl_set_error_handler_off();

  Objective obj{x};
  SimplexRun best{0.0, 0.0, kPenalty, false};
  for (double offset : {0.0, -0.25, 0.25, 0.5, 1.0}) {
    const double xi0 = std::clamp(xi_cv + offset, -0.9, 3.0);
    const SimplexRun run =
        run_simplex(obj, xi0, starting_log_psi(xi0, median, sample.max()), 0.1);
    if (run.value < best.value) best = run;
  }
  // Restart from the incumbent until it stops improving.
  for (int i = 0; i < 5 && best.value < kPenalty; ++i) {
    const SimplexRun run = run_simplex(obj, best.xi, best.log_psi, 0.02);
    const bool improved = run.value < best.value - 1e-12;
    if (run.value <= best.value) best = run;
    if (!improved) break;
  }
  gsl_set_error_handler(old_handler);

  if (!(best.value < kPenalty)) {
    throw Error(ErrorCode::kFitFailure, "GPD fit found no feasible parameters");
  }
  const GpdParams params(best.xi, std::exp(best.log_psi));
  std::optional<StdErrors> se;
  if (best.converged && params.xi() > -0.5) {
    se = observed_information_se(x, params.xi(), params.psi());
  }
  return FitResult{params, se, -best.value, best.converged};
}

}  // namespace evtail
