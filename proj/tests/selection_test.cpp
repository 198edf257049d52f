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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "evtail/error.hpp"
#include "evtail/gpd.hpp"
#include "evtail/threshold_test.hpp"
#include "evtail/transforms.hpp"

namespace evtail {
namespace {

// Exponential body with a Pareto-like tail glued on above the 60% point:
// the first stages should reject.
SampleData mixed_sample(std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<double> v;
  for (int i = 0; i < 1500; ++i) {
    const double u = rng.uniform();
    v.push_back(u < 0.6 ? 3.0 * u : 1.8 + gpd_quantile(GpdParams(-0.4, 0.5), (u - 0.6) / 0.4));
  }
  return SampleData::from_values(std::move(v));
}

SelectOptions fast_options() {
  SelectOptions o;
  o.m = 10;
  o.replicates = 200;
  o.seed = 17;
  return o;
}

TEST(ThresholdSelect, StepsAreConsecutiveAndConsistent) {
  const SampleData s = mixed_sample(1);
  const SelectionResult r = threshold_select(s, fast_options());
  ASSERT_FALSE(r.steps.empty());
  const SampleData shifted = s.shifted(r.grid.shift);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const SelectionStep& st = r.steps[i];
    EXPECT_EQ(st.stage, i);
    EXPECT_EQ(st.thresholds, r.grid.m - i);
    const auto count = std::count_if(s.values().begin(), s.values().end(),
                                     [&](double v) { return v - r.grid.shift >= r.grid.quantiles[i]; });
    EXPECT_EQ(st.n_exceed, static_cast<std::size_t>(count));
    if (i > 0) {
      EXPECT_LT(st.n_exceed, r.steps[i - 1].n_exceed);
    }
    EXPECT_GE(st.p_value, 0.0);
    EXPECT_LE(st.p_value, 1.0);
  }
  if (r.selected_stage) {
    EXPECT_EQ(*r.selected_stage, r.steps.size() - 1);
    EXPECT_FALSE(r.steps.back().rejected);
    for (std::size_t i = 0; i + 1 < r.steps.size(); ++i) EXPECT_TRUE(r.steps[i].rejected);
  }
  EXPECT_TRUE(r.steps.front().rejected);
}

TEST(ThresholdSelect, AllStagesKeepsFirstAcceptance) {
  const SampleData s = mixed_sample(2);
  SelectOptions o = fast_options();
  const SelectionResult first = threshold_select(s, o);
  o.all_stages = true;
  const SelectionResult all = threshold_select(s, o);
  EXPECT_EQ(first.selected_stage, all.selected_stage);
  EXPECT_EQ(all.steps.size(), o.m);
  for (std::size_t i = 0; i < first.steps.size(); ++i) {
    EXPECT_EQ(first.steps[i].p_value, all.steps[i].p_value);
  }
}

TEST(ThresholdSelect, DeterministicAcrossWorkerCounts) {
  const SampleData s = mixed_sample(3);
  SelectOptions o = fast_options();
  o.workers = 1;
  const SelectionResult a = threshold_select(s, o);
  o.workers = 3;
  const SelectionResult b = threshold_select(s, o);
  ASSERT_EQ(a.steps.size(), b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    EXPECT_EQ(a.steps[i].tm, b.steps[i].tm);
    EXPECT_EQ(a.steps[i].p_value, b.steps[i].p_value);
  }
  EXPECT_EQ(a.selected_stage, b.selected_stage);
}

TEST(ThresholdSelect, FullSampleModeRuns) {
  const SampleData s = mixed_sample(4);
  SelectOptions o = fast_options();
  o.stage_mode = StageMode::kFullSample;
  const SelectionResult r = threshold_select(s, o);
  ASSERT_FALSE(r.steps.empty());
  EXPECT_EQ(r.steps.front().tm, threshold_select(s, fast_options()).steps.front().tm);
}

TEST(ThresholdSelect, KnownShapeUsesSimpleNull) {
  RandomStream rng(5);
  const SampleData s = gpd_sample(GpdParams(-0.2, 1.0), 1000, rng);
  SelectOptions o = fast_options();
  o.known_xi = -0.2;
  const SelectionResult r = threshold_select(s, o);
  EXPECT_NEAR(r.steps.front().reference_cv, cv_of_xi(-0.2), 1e-15);
  if (r.final_xi) {
    EXPECT_EQ(*r.final_xi, -0.2);
  }
}

TEST(ThresholdSelect, HeavyTailNeedsTransform) {
  RandomStream rng(6);
  const SampleData s = gpd_sample(GpdParams(0.6, 1.0), 1000, rng);
  EXPECT_THROW(threshold_select(s, fast_options()), Error);
  const SelectionResult r = threshold_select(negate_reciprocal(s), fast_options());
  EXPECT_FALSE(r.steps.empty());
}

// Size calibration: a pure exponential sample is accepted at the first stage
// most of the time.
TEST(ThresholdSelect, PureGpdAcceptedAtFirstStage) {
  int accepted = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomStream rng(1000 + seed);
    const SampleData s = gpd_sample(GpdParams(0.0, 1.0), 2000, rng);
    SelectOptions o;
    o.replicates = 200;
    o.seed = seed;
    const SelectionResult r = threshold_select(s, o);
    accepted += r.selected_stage == std::optional<std::size_t>(0) ? 1 : 0;
  }
  EXPECT_GE(accepted, 90);
}

}  // namespace
}  // namespace evtail
