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

#ifndef HBF_CONFIG_HPP
#define HBF_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hbf/experiment.hpp"

namespace hbf {

enum class ConfigErrorKind {
  kUnreadable,
  kSyntax,
  kUnknownKey,
  kBadValue,
  kOutOfRange,
  kUsersExceedRfChains,
  kSubcarriersBelowTaps,
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorKind kind, std::string key, const std::string& message)
      : std::runtime_error(message), kind_(kind), key_(std::move(key)) {}

  ConfigErrorKind kind() const { return kind_; }
  const std::string& key() const { return key_; }

 private:
  ConfigErrorKind kind_;
  std::string key_;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Flat config format: one `key = value` per line, `#` starts a comment,
/// blank lines ignored. Keys may use '-' or '_'. Lists are comma separated.
///
///   antennas, users, rf_chains, subcarriers, taps, paths   positive integers
///   path_loss            beta_u for every user (linear)
///   path_loss_per_user   comma list, one beta_u per user
///   sampling_period_us   T_s in microseconds
///   noise_var            sigma^2 (linear)
///   spacing_ratio        antenna spacing over wavelength
///   strong_path_var, weak_path_var   variances of the first / other path gains
///   snr_db               comma list in dB, SNR = rho / (U sigma^2)
///   users_list           comma list of U values for a users sweep
///   trials, seed         Monte Carlo trial count and master seed
///   scheme               comma list of proposed | greedy | fully_digital
///   criterion            zf | mmse
///   candidates           M_u, one value or one per user
///   threads              worker threads (0 = all cores); never changes results
///   timing               on | off; off writes 0 design times (byte-stable output)
KeyValues read_key_values(std::istream& in);

// Reference setup: N=128, U=S=16, K=16, N_c=4, L=4, beta=0.25,
// T_s=1/1760 us, M_u=4, 2000 trials, MMSE.
SweepConfig default_config(SweepAxis axis);

void apply_setting(SweepConfig& config, const std::string& key, const std::string& value);

/// Resolves a sweep configuration: defaults, then the config file (if any),
/// then `overrides` (command-line flags). Throws ConfigError.
SweepConfig parse_config(SweepAxis axis, const std::optional<std::string>& path,
                         const KeyValues& overrides);
// Same, starting from caller-supplied defaults instead of default_config().
SweepConfig parse_config(SweepConfig defaults, const std::optional<std::string>& path,
                         const KeyValues& overrides);

}  // namespace hbf

#endif  // HBF_CONFIG_HPP
