// SPDX-License-Identifier: Apache-2.0
//
// hbf-sim: hybrid precoding simulator for wideband multiuser mmWave massive MIMO
// Copyright (C) 2026 The hbf-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef HBF_RNG_HPP
#define HBF_RNG_HPP

#include <cstdint>
#include <random>

#include "hbf/types.hpp"

namespace hbf {

// splitmix64 finalizer; used to decorrelate (seed, index) pairs.
std::uint64_t mix64(std::uint64_t x);

// Random stream for one trial. Uniform and normal variates are produced from
// raw mt19937_64 output with fixed arithmetic, so a given (master_seed,
// trial) pair yields the same numbers on every platform and standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Stream for trial `trial` under `master_seed`. Independent of any sweep
  // axis value so the same trial sees the same channel everywhere.
  static RandomStream for_trial(std::uint64_t master_seed, std::uint64_t trial);

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Circularly-symmetric complex normal with E|z|^2 = variance (Box-Muller).
  Complex complex_normal(double variance);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hbf

#endif  // HBF_RNG_HPP
