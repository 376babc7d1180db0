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

#include "hbf/types.hpp"

#include <cmath>

namespace hbf {

std::string to_string(Criterion c) {
  return c == Criterion::kZf ? "zf" : "mmse";
}

Criterion parse_criterion(const std::string& s) {
  if (s == "zf" || s == "ZF") return Criterion::kZf;
  if (s == "mmse" || s == "MMSE") return Criterion::kMmse;
  throw std::invalid_argument("unknown precoding criterion '" + s + "' (expected zf or mmse)");
}

void SystemParams::validate() const {
  if (n_users < 1) throw std::invalid_argument("n_users must be >= 1");
  if (n_rf_chains < n_users)
    throw std::invalid_argument("n_users (" + std::to_string(n_users) +
                                ") exceeds n_rf_chains (" + std::to_string(n_rf_chains) + ")");
  if (n_antennas < n_rf_chains)
    throw std::invalid_argument("n_rf_chains (" + std::to_string(n_rf_chains) +
                                ") exceeds n_antennas (" + std::to_string(n_antennas) + ")");
  if (n_subcarriers < 1) throw std::invalid_argument("n_subcarriers must be >= 1");
  if (n_taps < 1) throw std::invalid_argument("n_taps must be >= 1");
  if (n_subcarriers < n_taps)
    throw std::invalid_argument("n_subcarriers (" + std::to_string(n_subcarriers) +
                                ") is smaller than n_taps (" + std::to_string(n_taps) + ")");
  if (n_paths < 1) throw std::invalid_argument("n_paths must be >= 1");
  if (!(total_power > 0.0) || !std::isfinite(total_power))
    throw std::invalid_argument("total_power must be finite and > 0");
  if (!(noise_var > 0.0) || !std::isfinite(noise_var))
    throw std::invalid_argument("noise_var must be finite and > 0");
  if (!(spacing_ratio > 0.0) || !std::isfinite(spacing_ratio))
    throw std::invalid_argument("spacing_ratio must be finite and > 0");
  if (!(sampling_period > 0.0) || !std::isfinite(sampling_period))
    throw std::invalid_argument("sampling_period must be finite and > 0");
  if (!(strong_path_var >= 0.0) || !(weak_path_var >= 0.0))
    throw std::invalid_argument("path gain variances must be >= 0");
  if (!path_loss_per_user.empty() && path_loss_per_user.size() != n_users)
    throw std::invalid_argument("path_loss_per_user must have one entry per user");
  for (std::size_t u = 0; u < n_users; ++u) {
    if (!(beta(u) > 0.0) || !std::isfinite(beta(u)))
      throw std::invalid_argument("path loss must be finite and > 0");
  }
}

}  // namespace hbf
