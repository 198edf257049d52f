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

// Reference implementations. These are the definitions the SIMD variants are
// tested against; keep them as plain sequential loops.

#include "internal.hpp"

namespace evtail::kernels::detail {
namespace {

double sum_excess(const double* x, std::size_t n, double t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] - t;
  return acc;
}

double sum_sq_dev_excess(const double* x, std::size_t n, double t,
                         double mean) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (x[i] - t) - mean;
    acc += d * d;
  }
  return acc;
}

void stabilize(const double* x, std::size_t n, double c, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] / (c * (x[i] + c));
}

void inverse_stabilize(const double* z, std::size_t n, double c, double* out) {
  const double c2 = c * c;
  for (std::size_t i = 0; i < n; ++i) out[i] = c2 * z[i] / (1.0 - c * z[i]);
}

void negate_reciprocal(const double* x, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = -1.0 / x[i];
}

void subtract(const double* x, std::size_t n, double shift, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - shift;
}

}  // namespace

const KernelTable kScalarTable = {
    Isa::kScalar,      &sum_excess,        &sum_sq_dev_excess, &stabilize,
    &inverse_stabilize, &negate_reciprocal, &subtract,
};

}  // namespace evtail::kernels::detail
