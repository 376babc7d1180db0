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

#ifndef HBF_CHANNEL_HPP
#define HBF_CHANNEL_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hbf/rng.hpp"
#include "hbf/types.hpp"

namespace hbf {

// One propagation path of one user.
struct Path {
  Complex gain;
  double delay = 0.0;  // seconds, in [0, (N_c - 1) T_s]
  double aod = 0.0;    // radians, in [-pi/2, pi/2)
};

// paths[u][l] is path l of user u.
struct PathSet {
  std::vector<std::vector<Path>> paths;
};

// taps[u] is an N_c x N matrix; row d is h_u^(d).
struct TapChannel {
  std::vector<CMatrix> taps;

  std::size_t n_users() const { return taps.size(); }
};

// per_subcarrier[k] is the U x N matrix H[k]; row u is h_u[k].
struct FreqChannel {
  std::vector<CMatrix> per_subcarrier;

  std::size_t n_subcarriers() const { return per_subcarrier.size(); }
  std::size_t n_users() const {
    return per_subcarrier.empty() ? 0 : static_cast<std::size_t>(per_subcarrier.front().rows());
  }
  std::size_t n_antennas() const {
    return per_subcarrier.empty() ? 0 : static_cast<std::size_t>(per_subcarrier.front().cols());
  }
  const CMatrix& operator[](std::size_t k) const { return per_subcarrier[k]; }
};

/// Raised-cosine pulse with roll-off 1:
///   p(tau) = sinc(tau/T_s) cos(pi tau/T_s) / (1 - (2 tau/T_s)^2),
/// with the removable singularities at tau = +-T_s/2 replaced by their limit 1/2.
double pulse_shape(double tau, const SystemParams& params);

/// Draws all path parameters. Order per user, per path: gain, delay, angle.
/// The first path of each user uses strong_path_var, the rest weak_path_var.
PathSet draw_paths(const SystemParams& params, RandomStream& rng);

/// h_u^(d) = sqrt(N / (L beta_u)) sum_l alpha_{l,u} p(d T_s - tau_{l,u}) a^H(N, theta_{l,u}).
TapChannel tap_channel(const PathSet& paths, const SystemParams& params);

/// K-point DFT over the (zero-padded) tap sequence:
///   h_u[k] = sum_d h_u^(d) exp(-j 2 pi k d / K).
/// Throws if K < 1 or K < N_c.
FreqChannel to_frequency(const TapChannel& taps, const SystemParams& params);

/// draw_paths -> tap_channel -> to_frequency on the stream of `trial`.
FreqChannel generate_channel(const SystemParams& params, std::uint64_t trial);

// Text channel dump, one record per trial:
//   # hbf-channel-dump v1
//   params_hash <hex> seed <u64> trial <u64> users <U> taps <N_c> antennas <N>
//   <user> <tap> <antenna> <re> <im>     (N_c * N lines per user, %.17g)
//   end
void write_channel_dump(std::ostream& os, const TapChannel& taps, const SystemParams& params,
                        std::uint64_t params_hash, std::uint64_t trial);

}  // namespace hbf

#endif  // HBF_CHANNEL_HPP
