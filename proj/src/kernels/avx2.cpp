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

// AVX2 variants. Compiled with per-function target attributes rather than a
// TU-wide -mavx2 so no inline library code in this file can be emitted with
// AVX2 instructions and picked up by the linker for a scalar caller.

#include "internal.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define EVTAIL_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace evtail::kernels::detail {

#if EVTAIL_HAVE_AVX2_KERNELS
namespace {

#define EVTAIL_AVX2 __attribute__((target("avx2")))

EVTAIL_AVX2 inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

EVTAIL_AVX2 double sum_excess(const double* x, std::size_t n, double t) {
  const __m256d vt = _mm256_set1_pd(t);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_sub_pd(_mm256_loadu_pd(x + i), vt));
    acc1 = _mm256_add_pd(acc1, _mm256_sub_pd(_mm256_loadu_pd(x + i + 4), vt));
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_sub_pd(_mm256_loadu_pd(x + i), vt));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] - t;
  return acc;
}

EVTAIL_AVX2 double sum_sq_dev_excess(const double* x, std::size_t n, double t,
                                     double mean) {
  const __m256d vt = _mm256_set1_pd(t);
  const __m256d vm = _mm256_set1_pd(mean);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d d0 =
        _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), vt), vm);
    const __m256d d1 =
        _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i + 4), vt), vm);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d0, d0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(d1, d1));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i), vt), vm);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(d, d));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    const double d = (x[i] - t) - mean;
    acc += d * d;
  }
  return acc;
}

EVTAIL_AVX2 void stabilize(const double* x, std::size_t n, double c,
                           double* out) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(out + i,
                     _mm256_div_pd(v, _mm256_mul_pd(vc, _mm256_add_pd(v, vc))));
  }
  for (; i < n; ++i) out[i] = x[i] / (c * (x[i] + c));
}

EVTAIL_AVX2 void inverse_stabilize(const double* z, std::size_t n, double c,
                                   double* out) {
  const double c2 = c * c;
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vc2 = _mm256_set1_pd(c2);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(z + i);
    _mm256_storeu_pd(out + i,
                     _mm256_div_pd(_mm256_mul_pd(vc2, v),
                                   _mm256_sub_pd(one, _mm256_mul_pd(vc, v))));
  }
  for (; i < n; ++i) out[i] = c2 * z[i] / (1.0 - c * z[i]);
}

EVTAIL_AVX2 void negate_reciprocal(const double* x, std::size_t n,
                                   double* out) {
  const __m256d minus_one = _mm256_set1_pd(-1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_div_pd(minus_one, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) out[i] = -1.0 / x[i];
}

EVTAIL_AVX2 void subtract(const double* x, std::size_t n, double shift,
                          double* out) {
  const __m256d vs = _mm256_set1_pd(shift);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(x + i), vs));
  }
  for (; i < n; ++i) out[i] = x[i] - shift;
}

#undef EVTAIL_AVX2

const KernelTable kAvx2Table = {
    Isa::kAvx2,        &sum_excess,        &sum_sq_dev_excess, &stabilize,
    &inverse_stabilize, &negate_reciprocal, &subtract,
};

}  // namespace

const KernelTable* avx2_table() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") ? &kAvx2Table : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace evtail::kernels::detail
