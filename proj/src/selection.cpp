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

#include <string>

#include "evtail/error.hpp"
#include "evtail/random.hpp"
#include "evtail/threshold_test.hpp"

namespace evtail {

SelectionResult threshold_select(const SampleData& sample,
                                 const SelectOptions& options) {
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "alpha must lie in (0, 1)");
  }
  SelectionResult result;
  result.grid = build_grid(sample, options.m, options.ns, options.method);
  const ThresholdGrid& grid = result.grid;
  const SampleData shifted = sample.shifted(grid.shift);
  const NullMode mode = options.known_xi ? NullMode::kSimple : NullMode::kComposite;

  for (std::size_t r = 0; r < grid.m; ++r) {
    const double q_r = grid.quantiles[r];
    SelectionStep step;
    step.stage = r;
    step.threshold = q_r + grid.shift;
    step.n_exceed = shifted.size() - shifted.first_exceedance(q_r, true);
    step.thresholds = grid.m - r;

    SimulationOptions sim;
    sim.method = options.method;
    sim.inclusive = options.inclusive;
    sim.workers = options.workers;

    TmOutcome outcome;
    std::size_t sim_n = 0;
    std::size_t sim_m = 0;
    if (options.stage_mode == StageMode::kSubsample) {
      const SampleData excess = shifted.excesses_over(q_r, true);
      const ThresholdGrid stage_grid =
          grid_with_ratio(excess, grid.m - r, grid.p, options.method, options.ns);
      outcome = tm_statistic(excess, stage_grid, 0, options.known_xi, options.inclusive);
      sim_n = excess.size();
      sim_m = grid.m - r;
    } else {
      outcome = tm_statistic(sample, grid, r, options.known_xi, options.inclusive);
      sim_n = sample.size();
      sim_m = grid.m;
      sim.first_index = r;
    }

    const double sim_xi = options.known_xi ? *options.known_xi : outcome.xi_tilde;
    if (!(sim_xi < 0.25)) {
      throw Error(ErrorCode::kOutOfDomain,
                  "stage " + std::to_string(r) + " estimates xi=" +
                      std::to_string(sim_xi) +
                      " >= 0.25; transform the sample to a lighter tail "
                      "(neg-reciprocal or stabilize) before selecting");
    }
    step.cv_tilde = outcome.cv_tilde;
    step.xi_tilde = outcome.xi_tilde;
    step.reference_cv = outcome.reference_cv;
    step.tm = outcome.tm;
    step.p_value = simulate_p_value(outcome.tm, sim_n, sim_m, grid.p, sim_xi, mode,
                                    options.replicates,
                                    RandomStream::derive_seed(options.seed, r), sim);
    step.rejected = step.p_value < options.alpha;
    result.steps.push_back(step);
    if (!step.rejected && !result.selected_stage) {
      result.selected_stage = r;
      result.final_xi = sim_xi;
      if (!options.all_stages) break;
    }
  }
  return result;
}

}  // namespace evtail
