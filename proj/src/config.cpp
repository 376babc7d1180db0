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

#include "hbf/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <utility>

namespace hbf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
  key = trim(key);
  std::replace(key.begin(), key.end(), '-', '_');
  return key;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = value.find(',', start);
    out.push_back(trim(value.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ConfigError bad_value(const std::string& key, const std::string& value, const std::string& expected) {
  return ConfigError(ConfigErrorKind::kBadValue, key,
                     "invalid value '" + value + "' for '" + key + "': expected " + expected);
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
    throw bad_value(key, value, "a non-negative integer");
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
    throw bad_value(key, value, "an unsigned 64-bit integer");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(out))
    throw bad_value(key, value, "a finite real number");
  return out;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value, Parse parse) {
  std::vector<T> out;
  for (const std::string& item : split_list(value)) out.push_back(parse(key, item));
  return out;
}

}  // namespace

KeyValues read_key_values(std::istream& in) {
  KeyValues out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(ConfigErrorKind::kSyntax, {},
                        "config line " + std::to_string(line_no) + ": expected 'key = value'");
    out.emplace_back(normalize_key(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

SweepConfig default_config(SweepAxis axis) {
  SweepConfig c;
  c.axis = axis;
  if (axis == SweepAxis::kSnrDb) {
    c.snr_db = {0, 2, 4, 6, 8, 10, 12, 14};
  } else {
    c.snr_db = {14};
  }
  c.users = {4, 8, 12, 16};
  return c;
}

void apply_setting(SweepConfig& c, const std::string& raw_key, const std::string& value) {
  const std::string key = normalize_key(raw_key);
  SystemParams& p = c.base;
  if (key == "antennas") {
    p.n_antennas = parse_count(key, value);
  } else if (key == "users") {
    p.n_users = parse_count(key, value);
  } else if (key == "rf_chains") {
    p.n_rf_chains = parse_count(key, value);
  } else if (key == "subcarriers") {
    p.n_subcarriers = parse_count(key, value);
  } else if (key == "taps") {
    p.n_taps = parse_count(key, value);
  } else if (key == "paths") {
    p.n_paths = parse_count(key, value);
  } else if (key == "path_loss") {
    p.path_loss = parse_real(key, value);
  } else if (key == "path_loss_per_user") {
    p.path_loss_per_user = parse_list<double>(key, value, parse_real);
  } else if (key == "sampling_period_us") {
    p.sampling_period = parse_real(key, value) * 1e-6;
  } else if (key == "noise_var") {
    p.noise_var = parse_real(key, value);
  } else if (key == "spacing_ratio") {
    p.spacing_ratio = parse_real(key, value);
  } else if (key == "strong_path_var") {
    p.strong_path_var = parse_real(key, value);
  } else if (key == "weak_path_var") {
    p.weak_path_var = parse_real(key, value);
  } else if (key == "snr_db") {
    c.snr_db = parse_list<double>(key, value, parse_real);
  } else if (key == "users_list") {
    c.users = parse_list<std::size_t>(key, value, parse_count);
  } else if (key == "trials") {
    c.n_trials = parse_count(key, value);
  } else if (key == "seed") {
    p.master_seed = parse_u64(key, value);
  } else if (key == "scheme" || key == "schemes") {
    c.schemes.clear();
    for (const std::string& s : split_list(value)) {
      try {
        c.schemes.push_back(parse_scheme(s));
      } catch (const std::invalid_argument&) {
        throw bad_value(key, s, "proposed, greedy or fully_digital");
      }
    }
  } else if (key == "criterion") {
    try {
      c.trial.criterion = parse_criterion(trim(value));
    } catch (const std::invalid_argument&) {
      throw bad_value(key, value, "zf or mmse");
    }
  } else if (key == "candidates") {
    c.trial.candidates = parse_list<std::size_t>(key, value, parse_count);
  } else if (key == "threads") {
    c.threads = static_cast<unsigned>(parse_count(key, value));
  } else if (key == "timing") {
    const std::string v = trim(value);
    if (v == "on" || v == "true" || v == "1") {
      c.trial.measure_time = true;
    } else if (v == "off" || v == "false" || v == "0") {
      c.trial.measure_time = false;
    } else {
      throw bad_value(key, value, "on or off");
    }
  } else {
    throw ConfigError(ConfigErrorKind::kUnknownKey, key, "unknown config key '" + key + "'");
  }
}

SweepConfig parse_config(SweepAxis axis, const std::optional<std::string>& path,
                         const KeyValues& overrides) {
  return parse_config(default_config(axis), path, overrides);
}

SweepConfig parse_config(SweepConfig defaults, const std::optional<std::string>& path,
                         const KeyValues& overrides) {
  SweepConfig c = std::move(defaults);
  const SweepAxis axis = c.axis;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError(ConfigErrorKind::kUnreadable, {}, "cannot read config file '" + *path + "'");
    for (const auto& [k, v] : read_key_values(in)) apply_setting(c, k, v);
  }
  for (const auto& [k, v] : overrides) apply_setting(c, k, v);

  if (axis == SweepAxis::kUsers) {
    if (c.users.empty() || std::find(c.users.begin(), c.users.end(), std::size_t{0}) != c.users.end())
      throw ConfigError(ConfigErrorKind::kOutOfRange, "users_list", "users_list entries must be >= 1");
    // The base user count is only a placeholder on this axis; pin it to the largest point.
    c.base.n_users = *std::max_element(c.users.begin(), c.users.end());
  }
  const SystemParams& p = c.base;
  const std::size_t max_users = p.n_users;
  if (max_users > p.n_rf_chains)
    throw ConfigError(ConfigErrorKind::kUsersExceedRfChains, "users",
                      "number of users (" + std::to_string(max_users) + ") exceeds RF chains (" +
                          std::to_string(p.n_rf_chains) + ")");
  if (p.n_subcarriers < p.n_taps)
    throw ConfigError(ConfigErrorKind::kSubcarriersBelowTaps, "subcarriers",
                      "subcarriers (" + std::to_string(p.n_subcarriers) + ") must be >= taps (" +
                          std::to_string(p.n_taps) + ")");
  try {
    p.validate();
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(ConfigErrorKind::kOutOfRange, {}, std::string("out of range: ") + e.what());
  }
  return c;
}

}  // namespace hbf
