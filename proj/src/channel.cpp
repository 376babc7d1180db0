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

#include "hbf/channel.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "hbf/codebook.hpp"

namespace hbf {

namespace {

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(kPi * x) / (kPi * x);
}

}  // namespace

double pulse_shape(double tau, const SystemParams& params) {
  const double x = tau / params.sampling_period;
  const double denom = 1.0 - 4.0 * x * x;
  if (std::abs(denom) < 1e-12) return 0.5;
  return sinc(x) * std::cos(kPi * x) / denom;
}

PathSet draw_paths(const SystemParams& params, RandomStream& rng) {
  const double max_delay = static_cast<double>(params.n_taps - 1) * params.sampling_period;
  PathSet set;
  set.paths.resize(params.n_users);
  for (auto& user_paths : set.paths) {
    user_paths.resize(params.n_paths);
    for (std::size_t l = 0; l < params.n_paths; ++l) {
      Path& p = user_paths[l];
      p.gain = rng.complex_normal(l == 0 ? params.strong_path_var : params.weak_path_var);
      p.delay = max_delay * rng.uniform();
      p.aod = rng.uniform(-kPi / 2.0, kPi / 2.0);
    }
  }
  return set;
}

TapChannel tap_channel(const PathSet& paths, const SystemParams& params) {
  if (paths.paths.size() != params.n_users)
    throw DimensionError("tap_channel: path set has wrong number of users");
  const auto n_ant = static_cast<Eigen::Index>(params.n_antennas);
  const auto n_taps = static_cast<Eigen::Index>(params.n_taps);

  TapChannel out;
  out.taps.reserve(params.n_users);
  for (std::size_t u = 0; u < params.n_users; ++u) {
    const auto& user_paths = paths.paths[u];
    const double prefactor = std::sqrt(static_cast<double>(params.n_antennas) /
                                       (static_cast<double>(user_paths.size()) * params.beta(u)));
    CMatrix taps = CMatrix::Zero(n_taps, n_ant);
    for (const Path& p : user_paths) {
      const CRowVector a_h = steering_vector(params.n_antennas, p.aod, params.spacing_ratio).adjoint();
      for (Eigen::Index d = 0; d < n_taps; ++d) {
        const double pulse =
            pulse_shape(static_cast<double>(d) * params.sampling_period - p.delay, params);
        taps.row(d) += (prefactor * pulse) * p.gain * a_h;
      }
    }
    out.taps.push_back(std::move(taps));
  }
  return out;
}

FreqChannel to_frequency(const TapChannel& taps, const SystemParams& params) {
  const std::size_t k_count = params.n_subcarriers;
  if (k_count < 1) throw std::invalid_argument("to_frequency: K must be >= 1");
  if (taps.taps.empty()) throw DimensionError("to_frequency: no users");
  const auto n_users = static_cast<Eigen::Index>(taps.taps.size());
  const Eigen::Index n_ant = taps.taps.front().cols();
  const Eigen::Index n_taps = taps.taps.front().rows();
  if (static_cast<std::size_t>(n_taps) > k_count)
    throw std::invalid_argument("to_frequency: K (" + std::to_string(k_count) +
                                ") is smaller than the number of taps (" +
                                std::to_string(n_taps) + ")");

  FreqChannel out;
  out.per_subcarrier.assign(k_count, CMatrix::Zero(n_users, n_ant));
  for (std::size_t k = 0; k < k_count; ++k) {
    for (Eigen::Index d = 0; d < n_taps; ++d) {
      // Reduce k*d mod K first so the twiddle angle stays small.
      const auto phase_index = (k * static_cast<std::size_t>(d)) % k_count;
      const Complex twiddle =
          std::polar(1.0, -2.0 * kPi * static_cast<double>(phase_index) / static_cast<double>(k_count));
      for (Eigen::Index u = 0; u < n_users; ++u) {
        const CMatrix& user_taps = taps.taps[static_cast<std::size_t>(u)];
        if (user_taps.rows() != n_taps || user_taps.cols() != n_ant)
          throw DimensionError("to_frequency: inconsistent tap dimensions across users");
        out.per_subcarrier[k].row(u) += twiddle * user_taps.row(d);
      }
    }
  }
  return out;
}

FreqChannel generate_channel(const SystemParams& params, std::uint64_t trial) {
  RandomStream rng = RandomStream::for_trial(params.master_seed, trial);
  return to_frequency(tap_channel(draw_paths(params, rng), params), params);
}

void write_channel_dump(std::ostream& os, const TapChannel& taps, const SystemParams& params,
                        std::uint64_t params_hash, std::uint64_t trial) {
  char buf[128];
  os << "# hbf-channel-dump v1\n";
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(params_hash));
  os << "params_hash " << buf << " seed " << params.master_seed << " trial " << trial << " users "
     << taps.taps.size() << " taps " << (taps.taps.empty() ? 0 : taps.taps.front().rows())
     << " antennas " << (taps.taps.empty() ? 0 : taps.taps.front().cols()) << '\n';
  for (std::size_t u = 0; u < taps.taps.size(); ++u) {
    const CMatrix& m = taps.taps[u];
    for (Eigen::Index d = 0; d < m.rows(); ++d) {
      for (Eigen::Index q = 0; q < m.cols(); ++q) {
        std::snprintf(buf, sizeof buf, "%zu %lld %lld %.17g %.17g\n", u, static_cast<long long>(d),
                      static_cast<long long>(q), m(d, q).real(), m(d, q).imag());
        os << buf;
      }
    }
  }
  os << "end\n";
}

}  // namespace hbf
