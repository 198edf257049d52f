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

// Data-parallel inner loops used by the residual statistics and the tail
// transforms.
//
// Each kernel has a scalar reference implementation and, where the target
// supports it, a SIMD variant (AVX2 on x86-64, NEON on AArch64). The variant
// is selected once at first use from the CPU's reported features. Setting
// EVTAIL_KERNELS=scalar in the environment forces the reference path.
//
// Element-wise maps are bit-identical across variants: they use only
// correctly rounded add/mul/div. Reductions use several accumulators in the
// SIMD variants and so differ from the sequential reference in the last
// few ulps; tests/kernels_test.cpp pins that tolerance.

#ifndef EVTAIL_KERNELS_HPP_
#define EVTAIL_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

namespace evtail::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

// Function table for one instruction set.
struct KernelTable {
  Isa isa;
  // sum_i (x[i] - t)
  double (*sum_excess)(const double* x, std::size_t n, double t);
  // sum_i ((x[i] - t) - mean)^2
  double (*sum_sq_dev_excess)(const double* x, std::size_t n, double t,
                              double mean);
  // out[i] = x[i] / (c * (x[i] + c))
  void (*stabilize)(const double* x, std::size_t n, double c, double* out);
  // out[i] = c * c * z[i] / (1 - c * z[i])
  void (*inverse_stabilize)(const double* z, std::size_t n, double c,
                            double* out);
  // out[i] = -1 / x[i]
  void (*negate_reciprocal)(const double* x, std::size_t n, double* out);
  // out[i] = x[i] - shift
  void (*subtract)(const double* x, std::size_t n, double shift, double* out);
};

// Table chosen for this process.
const KernelTable& active();

// Tables compiled into this binary and runnable on this CPU, scalar first.
std::span<const KernelTable* const> available();

const KernelTable& scalar_table();

// Convenience wrappers over active().
inline double sum_excess(std::span<const double> x, double t) {
  return active().sum_excess(x.data(), x.size(), t);
}
inline double sum_sq_dev_excess(std::span<const double> x, double t,
                                double mean) {
  return active().sum_sq_dev_excess(x.data(), x.size(), t, mean);
}

}  // namespace evtail::kernels

#endif  // EVTAIL_KERNELS_HPP_
