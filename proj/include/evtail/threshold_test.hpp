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

// Multiple-threshold goodness-of-fit test for the GPD built on the residual
// coefficient of variation, and the sequential threshold selection that
// applies it to ever higher tails.
//
// Thresholds are empirical quantiles q_k = Q_n(1 - p^k), k = 0..m, of the
// sample shifted to start at zero, so n(q_k) is close to n p^k and the
// thresholds are roughly evenly spaced under exponentiality. The statistic
//
//   T = n * sum_{k=r..m} p^k (cv(q_k) - c)^2
//
// measures how far the per-threshold CVs stray from a common value c: either
// c_xi for a given shape (simple null) or their p^k-weighted mean, which is
// the minimiser of T over c (composite null). Its null distribution depends
// only on n, m, p and xi, and is obtained by simulating GPD(xi, 1) samples.

#ifndef EVTAIL_THRESHOLD_TEST_HPP_
#define EVTAIL_THRESHOLD_TEST_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "evtail/residual_cv.hpp"
#include "evtail/sample.hpp"

namespace evtail {

struct ThresholdGrid {
  std::size_t m = 0;
  double p = 0.0;
  std::size_t ns = 0;
  // Size and minimum of the sample the grid was built on; quantiles are in
  // units of that sample minus `shift`.
  std::size_t n = 0;
  double shift = 0.0;
  QuantileMethod method = QuantileMethod::kInterpolated;
  std::vector<double> probs;      // 1 - p^k
  std::vector<double> quantiles;  // q_k, q_0 = 0
  std::vector<double> weights;    // p^k
};

// p = (ns/n)^(1/m) rounded to two decimals, then the grid on the sample
// shifted by its minimum. Throws kInvalidInput for m = 0 or n <= ns and
// kInvalidGrid when p rounds outside (0, 1) or some threshold keeps fewer
// than 2 exceedances (or only ties).
ThresholdGrid build_grid(const SampleData& sample, std::size_t m, std::size_t ns,
                         QuantileMethod method = QuantileMethod::kInterpolated);

// Same construction with the ratio p given.
ThresholdGrid grid_with_ratio(const SampleData& sample, std::size_t m, double p,
                              QuantileMethod method = QuantileMethod::kInterpolated,
                              std::size_t ns = kDefaultMinTail);

// p rounded the way the reference R code does it.
double grid_ratio(std::size_t n, std::size_t m, std::size_t ns);

// sqrt(n(t)) (cv(t) - c_xi). Throws kOutOfDomain for xi >= 0.25 and the
// residual_cv errors.
double deviation_statistic(const SampleData& sample, double t, double xi,
                           bool inclusive = true);

// sum_{k=r..m} p^k cv_k / sum_{k=r..m} p^k, with cvs[j] the CV at threshold
// k = r + j.
double estimate_cv_tilde(std::span<const double> cvs, const ThresholdGrid& grid,
                         std::size_t r = 0);

enum class NullMode { kSimple, kComposite };

struct TmOutcome {
  double cv_tilde = 0.0;
  double xi_tilde = 0.0;
  // The c the statistic was centred on: c_xi (simple) or cv_tilde.
  double reference_cv = 0.0;
  double tm = 0.0;
  std::vector<double> per_threshold_cv;  // k = r..m
  std::size_t n = 0;
  std::size_t first_index = 0;
  std::optional<double> p_value;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
};

// T over thresholds k = r..m of `grid`, which must have been built on
// `sample`. With xi the null is simple (c = c_xi, xi < 0.25 required);
// without it c is estimated by estimate_cv_tilde.
TmOutcome tm_statistic(const SampleData& sample, const ThresholdGrid& grid,
                       std::size_t r = 0, std::optional<double> xi = std::nullopt,
                       bool inclusive = true);

struct SimulationOptions {
  QuantileMethod method = QuantileMethod::kInterpolated;
  bool inclusive = true;
  // First threshold index included in the statistic.
  std::size_t first_index = 0;
  // 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned workers = 0;
};

// Statistics of `replicates` GPD(xi, 1) samples of size n, each with its own
// grid of ratio p and m_eff thresholds. Replicate i draws from
// RandomStream(seed, i).
std::vector<double> simulate_null_statistics(std::size_t n, std::size_t m_eff,
                                             double p, double xi, NullMode mode,
                                             std::size_t replicates,
                                             std::uint64_t seed,
                                             const SimulationOptions& options = {});

// Fraction of simulated statistics >= observed_tm. Throws kOutOfDomain for
// xi >= 0.25 and kInvalidInput for fewer than 100 replicates.
double simulate_p_value(double observed_tm, std::size_t n, std::size_t m_eff,
                        double p, double xi, NullMode mode,
                        std::size_t replicates, std::uint64_t seed,
                        const SimulationOptions& options = {});

// How stage r > 0 of the selection is evaluated.
enum class StageMode {
  // The statistic is recomputed on the excesses over q_r (n_r observations,
  // m - r thresholds, same p), as when re-running the one-stage test on the
  // sub-sample.
  kSubsample,
  // Thresholds q_r..q_m of the full-sample grid with the full-sample n and
  // weights p^k.
  kFullSample,
};

struct SelectOptions {
  std::size_t m = 20;
  std::size_t ns = kDefaultMinTail;
  double alpha = 0.05;
  std::size_t replicates = 10000;
  std::uint64_t seed = 0;
  // Known shape: every stage tests the simple null at this xi.
  std::optional<double> known_xi;
  QuantileMethod method = QuantileMethod::kInterpolated;
  bool inclusive = true;
  StageMode stage_mode = StageMode::kSubsample;
  // Keep evaluating the remaining stages after the first acceptance. The
  // selected stage is still the first one with p >= alpha.
  bool all_stages = false;
  unsigned workers = 0;
};

struct SelectionStep {
  std::size_t stage = 0;       // r
  double threshold = 0.0;      // q_r in units of the input sample
  std::size_t n_exceed = 0;    // n_r
  std::size_t thresholds = 0;  // m - r
  double cv_tilde = 0.0;
  double xi_tilde = 0.0;
  double reference_cv = 0.0;
  double tm = 0.0;
  double p_value = 0.0;
  bool rejected = false;
};

struct SelectionResult {
  std::vector<SelectionStep> steps;
  std::optional<std::size_t> selected_stage;
  std::optional<double> final_xi;
  ThresholdGrid grid;
};

// Tests stages r = 0, 1, ... until the null is accepted (p >= alpha) or
// fewer than one non-zero threshold would remain. Thresholds are fixed by
// the stage-0 grid. Stage r simulates with seed derive_seed(seed, r).
SelectionResult threshold_select(const SampleData& sample,
                                 const SelectOptions& options = {});

}  // namespace evtail

#endif  // EVTAIL_THRESHOLD_TEST_HPP_
