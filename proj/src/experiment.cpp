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

#include "hbf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hbf/precoding.hpp"
#include "hbf/rate.hpp"
#include "hbf/selection.hpp"

#ifndef HBF_VERSION
#define HBF_VERSION "0.0.0"
#endif

namespace hbf {

std::string version_string() { return HBF_VERSION; }

double total_power_for_snr(double snr_db, std::size_t n_users, double noise_var) {
  return std::pow(10.0, snr_db / 10.0) * static_cast<double>(n_users) * noise_var;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

TrialOutcome run_trial(const FreqChannel& channel, const Codebook& codebook, const SystemParams& params,
                       SchemeId scheme, const TrialOptions& options) {
  TrialOutcome out;
  try {
    const auto start = Clock::now();
    std::vector<CMatrix> composite;
    switch (scheme) {
      case SchemeId::kProposed: {
        const SelectionResult sel = select_codewords(channel, codebook, params, options.candidates);
        HybridPrecoder hp = design_hybrid(channel, sel.analog, params, options.criterion);
        out.design_seconds = seconds_since(start);
        out.degenerate = hp.degenerate;
        out.conflict = sel.analog.has_conflict();
        composite = hp.composite();
        break;
      }
      case SchemeId::kGreedyConflictAgnostic: {
        const AnalogPrecoder analog = greedy_select(if_rate_table(channel, codebook, params), codebook);
        HybridPrecoder hp = design_hybrid(channel, analog, params, options.criterion);
        out.design_seconds = seconds_since(start);
        out.degenerate = hp.degenerate;
        out.conflict = analog.has_conflict();
        composite = hp.composite();
        break;
      }
      case SchemeId::kFullyDigital:
        composite = fully_digital(channel, params, options.criterion);
        out.design_seconds = seconds_since(start);
        break;
    }
    if (!options.measure_time) out.design_seconds = 0.0;
    out.sum_rate = sum_rate(channel, composite, params).sum_rate;
    if (!std::isfinite(out.sum_rate)) throw std::runtime_error("non-finite sum-rate");
  } catch (const std::exception& e) {
    out.failed = true;
    out.error = e.what();
    out.sum_rate = 0.0;
  }
  return out;
}

TrialOutcome run_trial(const SystemParams& params, SchemeId scheme, std::uint64_t trial,
                       const TrialOptions& options) {
  params.validate();
  const FreqChannel channel = generate_channel(params, trial);
  return run_trial(channel, dft_codebook(params.n_antennas, params.spacing_ratio), params, scheme, options);
}

std::string axis_name(SweepAxis axis) { return axis == SweepAxis::kSnrDb ? "snr_db" : "users"; }

std::vector<double> SweepConfig::axis_values() const {
  if (axis == SweepAxis::kSnrDb) return snr_db;
  std::vector<double> out;
  for (std::size_t u : users) out.push_back(static_cast<double>(u));
  return out;
}

SystemParams SweepConfig::params_at(double axis_value) const {
  SystemParams p = base;
  double snr = snr_db.empty() ? 0.0 : snr_db.front();
  if (axis == SweepAxis::kSnrDb) {
    snr = axis_value;
  } else {
    p.n_users = static_cast<std::size_t>(axis_value);
  }
  p.total_power = total_power_for_snr(snr, p.n_users, p.noise_var);
  return p;
}

void SweepConfig::validate() const {
  if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
  if (schemes.empty()) throw std::invalid_argument("at least one scheme is required");
  if (snr_db.empty()) throw std::invalid_argument("at least one SNR value is required");
  for (double s : snr_db) {
    if (!std::isfinite(s)) throw std::invalid_argument("SNR values must be finite");
  }
  if (axis == SweepAxis::kUsers) {
    if (snr_db.size() != 1) throw std::invalid_argument("a users sweep takes exactly one SNR value");
    if (users.empty()) throw std::invalid_argument("at least one user count is required");
    if (trial.candidates.size() > 1)
      throw std::invalid_argument("per-user candidate counts cannot be combined with a users sweep");
  }
  if (trial.candidates.empty()) throw std::invalid_argument("candidate count (M_u) is required");
  if (trial.candidates.size() > 1 && trial.candidates.size() != base.n_users)
    throw std::invalid_argument("need one candidate count or one per user");
  for (std::size_t m : trial.candidates) {
    if (m < 2 || m > base.n_antennas)
      throw std::invalid_argument("candidate count must lie in [2, n_antennas]");
  }
  for (double v : axis_values()) params_at(v).validate();
}

std::string canonical_form(const SweepConfig& c) {
  std::ostringstream os;
  os.precision(17);
  const SystemParams& p = c.base;
  os << "antennas=" << p.n_antennas << '\n'
     << "users=" << p.n_users << '\n'
     << "rf_chains=" << p.n_rf_chains << '\n'
     << "subcarriers=" << p.n_subcarriers << '\n'
     << "taps=" << p.n_taps << '\n'
     << "paths=" << p.n_paths << '\n'
     << "path_loss=" << p.path_loss << '\n';
  os << "path_loss_per_user=";
  for (std::size_t i = 0; i < p.path_loss_per_user.size(); ++i)
    os << (i ? "," : "") << p.path_loss_per_user[i];
  os << '\n'
     << "sampling_period_s=" << p.sampling_period << '\n'
     << "noise_var=" << p.noise_var << '\n'
     << "spacing_ratio=" << p.spacing_ratio << '\n'
     << "strong_path_var=" << p.strong_path_var << '\n'
     << "weak_path_var=" << p.weak_path_var << '\n'
     << "seed=" << p.master_seed << '\n'
     << "axis=" << axis_name(c.axis) << '\n';
  os << "snr_db=";
  for (std::size_t i = 0; i < c.snr_db.size(); ++i) os << (i ? "," : "") << c.snr_db[i];
  os << "\nusers_list=";
  for (std::size_t i = 0; i < c.users.size(); ++i) os << (i ? "," : "") << c.users[i];
  os << "\nschemes=";
  for (std::size_t i = 0; i < c.schemes.size(); ++i) os << (i ? "," : "") << to_string(c.schemes[i]);
  os << "\ntrials=" << c.n_trials << '\n'
     << "criterion=" << to_string(c.trial.criterion) << '\n';
  os << "candidates=";
  for (std::size_t i = 0; i < c.trial.candidates.size(); ++i)
    os << (i ? "," : "") << c.trial.candidates[i];
  os << "\ntiming=" << (c.trial.measure_time ? "on" : "off") << '\n';
  return os.str();
}

std::uint64_t config_hash(const SweepConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical_form(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::vector<TrialOutcome>& SweepSamples::at(SchemeId scheme, std::size_t axis_index) const {
  for (std::size_t s = 0; s < schemes.size(); ++s) {
    if (schemes[s] == scheme) return outcomes.at(s).at(axis_index);
  }
  throw std::out_of_range("SweepSamples: scheme not in sweep");
}

ResultRow summarize(SchemeId scheme, SweepAxis axis, double axis_value, std::size_t n_users,
                    const std::vector<TrialOutcome>& outcomes, std::uint64_t seed) {
  ResultRow row;
  row.scheme = scheme;
  row.axis_name = axis_name(axis);
  row.axis_value = axis_value;
  row.n_trials = outcomes.size();
  row.seed = seed;

  std::vector<double> times;
  double sum = 0.0;
  std::size_t ok = 0;
  for (const TrialOutcome& t : outcomes) {
    if (t.failed) {
      ++row.n_failures;
      continue;
    }
    sum += t.sum_rate;
    times.push_back(t.design_seconds);
    ++ok;
  }
  if (ok > 0) {
    const double mean = sum / static_cast<double>(ok);
    double ss = 0.0;
    for (const TrialOutcome& t : outcomes) {
      if (!t.failed) ss += (t.sum_rate - mean) * (t.sum_rate - mean);
    }
    row.mean_sum_rate = mean;
    row.stderr_sum_rate = ok > 1 ? std::sqrt(ss / static_cast<double>(ok - 1) / static_cast<double>(ok)) : 0.0;
    row.mean_per_user_rate = mean / static_cast<double>(n_users);
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    row.median_design_time_s = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
  } else {
    row.mean_sum_rate = std::nan("");
    row.mean_per_user_rate = std::nan("");
  }
  return row;
}

SweepResult run_sweep_detailed(const SweepConfig& config) {
  config.validate();
  const std::vector<double> axis_values = config.axis_values();
  const std::size_t n_schemes = config.schemes.size();
  const std::size_t n_axis = axis_values.size();
  const std::size_t n_trials = config.n_trials;
  const Codebook codebook = dft_codebook(config.base.n_antennas, config.base.spacing_ratio);

  SweepResult result;
  SweepSamples& samples = result.samples;
  samples.schemes = config.schemes;
  samples.axis_values = axis_values;
  samples.outcomes.assign(n_schemes, std::vector<std::vector<TrialOutcome>>(
                                         n_axis, std::vector<TrialOutcome>(n_trials)));

  // Every trial writes only its own slots, so the outcome layout does not
  // depend on scheduling.
  auto run_one = [&](std::size_t t) {
    FreqChannel channel;
    for (std::size_t a = 0; a < n_axis; ++a) {
      const SystemParams params = config.params_at(axis_values[a]);
      // The channel does not depend on SNR; regenerate only when U changes.
      if (a == 0 || config.axis == SweepAxis::kUsers) channel = generate_channel(params, t);
      for (std::size_t s = 0; s < n_schemes; ++s) {
        samples.outcomes[s][a][t] = run_trial(channel, codebook, params, config.schemes[s], config.trial);
      }
    }
  };

  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_trials));
  if (workers <= 1) {
    for (std::size_t t = 0; t < n_trials; ++t) run_one(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < n_trials; t = next++) run_one(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  ResultTable& table = result.table;
  table.seed = config.master_seed();
  table.config_hash = config_hash(config);
  table.version = version_string();
  table.config = canonical_form(config);

  std::vector<std::size_t> scheme_order(n_schemes);
  for (std::size_t s = 0; s < n_schemes; ++s) scheme_order[s] = s;
  std::stable_sort(scheme_order.begin(), scheme_order.end(), [&](std::size_t a, std::size_t b) {
    return static_cast<int>(config.schemes[a]) < static_cast<int>(config.schemes[b]);
  });
  std::vector<std::size_t> axis_order(n_axis);
  for (std::size_t a = 0; a < n_axis; ++a) axis_order[a] = a;
  std::stable_sort(axis_order.begin(), axis_order.end(),
                   [&](std::size_t a, std::size_t b) { return axis_values[a] < axis_values[b]; });

  for (std::size_t s : scheme_order) {
    for (std::size_t a : axis_order) {
      const std::size_t n_users = config.params_at(axis_values[a]).n_users;
      table.rows.push_back(summarize(config.schemes[s], config.axis, axis_values[a], n_users,
                                     samples.outcomes[s][a], config.master_seed()));
    }
  }
  return result;
}

ResultTable run_sweep(const SweepConfig& config) { return run_sweep_detailed(config).table; }

}  // namespace hbf
