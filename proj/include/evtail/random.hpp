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

#ifndef EVTAIL_RANDOM_HPP_
#define EVTAIL_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace evtail {

// Uniform source addressed by (seed, stream). Two streams with the same key
// produce the same sequence on every platform: both std::seed_seq and
// std::mt19937_64 are fully specified by the standard, and the conversion to
// doubles below does not go through the implementation-defined
// std::uniform_real_distribution.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Deterministic child seed; used to give each selection stage its own
  // family of replicate streams.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

 private:
  std::mt19937_64 engine_;
};

}  // namespace evtail

#endif  // EVTAIL_RANDOM_HPP_
