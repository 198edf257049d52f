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

#include "evtail/transforms.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "evtail/error.hpp"
#include "evtail/kernels.hpp"

namespace evtail {

StabilizeSpec::StabilizeSpec(double c, std::optional<GpdParams> source)
    : c_(c), source_(source) {
  if (!std::isfinite(c) || c == 0.0) {
    throw Error(ErrorCode::kInvalidInput,
                "stabilizing constant c must be finite and non-zero");
  }
  if (source && source->xi() < 0.0 && c < 0.0 && c > -source->support_end()) {
    throw Error(ErrorCode::kInvalidInput,
                "stabilizing constant c must satisfy c > 0 or c <= -sigma");
  }
}

StabilizeSpec StabilizeSpec::from_params(const GpdParams& params) {
  if (!(params.xi() > 0.0)) {
    throw Error(ErrorCode::kOutOfDomain,
                "c = psi/xi needs a heavy tail (xi > 0), got xi=" +
                    std::to_string(params.xi()));
  }
  return StabilizeSpec(params.psi() / params.xi(), params);
}

StabilizeSpec StabilizeSpec::from_fit(const SampleData& sample) {
  return from_params(gpd_mle_fit(sample).params);
}

SampleData negate_reciprocal(const SampleData& sample) {
  if (!(sample.min() > 0.0)) {
    throw Error(ErrorCode::kInvalidInput,
                "-1/x needs strictly positive values (minimum is " +
                    std::to_string(sample.min()) + ")");
  }
  std::vector<double> out(sample.size());
  kernels::active().negate_reciprocal(sample.values().data(), sample.size(),
                                      out.data());
  return SampleData::from_sorted(std::move(out));
}

SampleData stabilize(const SampleData& sample, const StabilizeSpec& spec) {
  const double c = spec.c();
  if (sample.min() < 0.0) {
    throw Error(ErrorCode::kInvalidInput,
                "stabilize needs non-negative values (minimum is " +
                    std::to_string(sample.min()) + ")");
  }
  if (c < 0.0 && !(sample.max() + c < 0.0)) {
    throw Error(ErrorCode::kInvalidInput,
                "stabilize with c < 0 needs x + c < 0 for every value; map is "
                "not monotone on this sample");
  }
  std::vector<double> out(sample.size());
  kernels::active().stabilize(sample.values().data(), sample.size(), c, out.data());
  return SampleData::from_sorted(std::move(out));
}

SampleData inverse_stabilize(const SampleData& sample, const StabilizeSpec& spec) {
  const double c = spec.c();
  if (sample.min() < 0.0) {
    throw Error(ErrorCode::kInvalidInput, "inverse stabilize needs values >= 0");
  }
  if (c > 0.0 && !(sample.max() < 1.0 / c)) {
    throw Error(ErrorCode::kInvalidInput,
                "inverse stabilize needs values below 1/c = " + std::to_string(1.0 / c));
  }
  std::vector<double> out(sample.size());
  kernels::active().inverse_stabilize(sample.values().data(), sample.size(), c,
                                      out.data());
  return SampleData::from_sorted(std::move(out));
}

}  // namespace evtail
