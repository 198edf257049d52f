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

// NEON variants for AArch64, where Advanced SIMD is part of the base ISA and
// needs no runtime check.

#include "internal.hpp"

#if defined(__aarch64__)
#define EVTAIL_HAVE_NEON_KERNELS 1
#include <arm_neon.h>
#endif

namespace evtail::kernels::detail {

#if EVTAIL_HAVE_NEON_KERNELS
namespace {

double sum_excess(const double* x, std::size_t n, double t) {
  const float64x2_t vt = vdupq_n_f64(t);
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vsubq_f64(vld1q_f64(x + i), vt));
    acc1 = vaddq_f64(acc1, vsubq_f64(vld1q_f64(x + i + 2), vt));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += x[i] - t;
  return acc;
}

double sum_sq_dev_excess(const double* x, std::size_t n, double t,
                         double mean) {
  const float64x2_t vt = vdupq_n_f64(t);
  const float64x2_t vm = vdupq_n_f64(mean);
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vsubq_f64(vld1q_f64(x + i), vt), vm);
    const float64x2_t d1 = vsubq_f64(vsubq_f64(vld1q_f64(x + i + 2), vt), vm);
    acc0 = vaddq_f64(acc0, vmulq_f64(d0, d0));
    acc1 = vaddq_f64(acc1, vmulq_f64(d1, d1));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    const double d = (x[i] - t) - mean;
    acc += d * d;
  }
  return acc;
}

void stabilize(const double* x, std::size_t n, double c, double* out) {
  const float64x2_t vc = vdupq_n_f64(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(x + i);
    vst1q_f64(out + i, vdivq_f64(v, vmulq_f64(vc, vaddq_f64(v, vc))));
  }
  for (; i < n; ++i) out[i] = x[i] / (c * (x[i] + c));
}

void inverse_stabilize(const double* z, std::size_t n, double c, double* out) {
  const double c2 = c * c;
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vc2 = vdupq_n_f64(c2);
  const float64x2_t one = vdupq_n_f64(1.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(z + i);
    vst1q_f64(out + i,
              vdivq_f64(vmulq_f64(vc2, v), vsubq_f64(one, vmulq_f64(vc, v))));
  }
  for (; i < n; ++i) out[i] = c2 * z[i] / (1.0 - c * z[i]);
}

void negate_reciprocal(const double* x, std::size_t n, double* out) {
  const float64x2_t minus_one = vdupq_n_f64(-1.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vdivq_f64(minus_one, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) out[i] = -1.0 / x[i];
}

void subtract(const double* x, std::size_t n, double shift, double* out) {
  const float64x2_t vs = vdupq_n_f64(shift);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vsubq_f64(vld1q_f64(x + i), vs));
  }
  for (; i < n; ++i) out[i] = x[i] - shift;
}

const KernelTable kNeonTable = {
    Isa::kNeon,        &sum_excess,        &sum_sq_dev_excess, &stabilize,
    &inverse_stabilize, &negate_reciprocal, &subtract,
};

}  // namespace

const KernelTable* neon_table() { return &kNeonTable; }

#else

const KernelTable* neon_table() { return nullptr; }

#endif

}  // namespace evtail::kernels::detail
