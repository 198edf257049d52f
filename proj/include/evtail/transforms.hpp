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

// Monotone maps that trade heavy tails for light ones so that moment-based
// tail methods apply beyond xi = 0.25.
//
// negate_reciprocal: x -> -1/x. A tail in the domain of attraction with
//   index xi > 0 becomes one with index -xi, asymptotically.
// stabilize: x -> -1/(x + c) + 1/c = x / (c (x + c)). For GPD(xi, psi) input
//   and c = psi/xi the output is exactly GPD(-xi, xi^2/psi) on (0, xi/psi).

#ifndef EVTAIL_TRANSFORMS_HPP_
#define EVTAIL_TRANSFORMS_HPP_

#include <optional>

#include "evtail/gpd.hpp"
#include "evtail/sample.hpp"

namespace evtail {

class StabilizeSpec {
 public:
  // Throws kInvalidInput when c is zero or not finite, or when source params
  // with xi < 0 are given and -sigma < c < 0.
  explicit StabilizeSpec(double c, std::optional<GpdParams> source = std::nullopt);

  // c = psi/xi for a GPD; requires xi > 0.
  static StabilizeSpec from_params(const GpdParams& params);
  // c = psi_hat/xi_hat from gpd_mle_fit(sample); throws kOutOfDomain when
  // the fitted tail is not heavy (xi_hat <= 0).
  static StabilizeSpec from_fit(const SampleData& sample);

  double c() const noexcept { return c_; }
  const std::optional<GpdParams>& source_params() const noexcept { return source_; }

 private:
  double c_;
  std::optional<GpdParams> source_;
};

// Throws kInvalidInput if any value is <= 0.
SampleData negate_reciprocal(const SampleData& sample);

// Requires values >= 0 and, for c < 0, x + c < 0 throughout.
SampleData stabilize(const SampleData& sample, const StabilizeSpec& spec);

// x = c^2 z / (1 - c z). Requires 0 <= z < 1/c for c > 0, z >= 0 for c < 0.
SampleData inverse_stabilize(const SampleData& sample, const StabilizeSpec& spec);

}  // namespace evtail

#endif  // EVTAIL_TRANSFORMS_HPP_
