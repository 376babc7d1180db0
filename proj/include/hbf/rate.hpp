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

#ifndef HBF_RATE_HPP
#define HBF_RATE_HPP

#include <cstddef>
#include <vector>

#include "hbf/channel.hpp"
#include "hbf/types.hpp"

namespace hbf {

struct HybridPrecoder;

// Rates in bits/s/Hz.
struct RateReport {
  RMatrix per_user_per_subcarrier;  // U x K
  double sum_rate = 0.0;            // (1/K) sum_u sum_k R_u[k]
};

// log2(1 + scale*signal / (scale*interference + noise)).
double sinr_rate(double signal, double interference, double scale, double noise);

// R_u[k] for the composite precoder W = F_RF F_BB[k] (N x U). Interference is
// summed over every column i != u.
double composite_user_rate(const CRowVector& h_row, const CMatrix& composite, std::size_t user,
                           const SystemParams& params);

double per_user_rate(const CRowVector& h_row, const CMatrix& analog, const CMatrix& digital,
                     std::size_t user, const SystemParams& params);

// Interference-free rate log2(1 + rho |h f|^2 / (K U sigma^2)).
double if_rate(const CRowVector& h_row, const CVector& codeword, const SystemParams& params);

RateReport sum_rate(const FreqChannel& channel, const HybridPrecoder& precoder,
                    const SystemParams& params);

// Same aggregation for an arbitrary per-subcarrier N x U precoder (used for
// the fully digital baseline).
RateReport sum_rate(const FreqChannel& channel, const std::vector<CMatrix>& composite,
                    const SystemParams& params);

}  // namespace hbf

#endif  // HBF_RATE_HPP
