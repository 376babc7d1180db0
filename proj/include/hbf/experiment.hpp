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

#ifndef HBF_EXPERIMENT_HPP
#define HBF_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hbf/baselines.hpp"
#include "hbf/channel.hpp"
#include "hbf/codebook.hpp"
#include "hbf/types.hpp"

namespace hbf {

std::string version_string();

// SNR = rho / (U sigma^2); returns rho for the given SNR in dB.
double total_power_for_snr(double snr_db, std::size_t n_users, double noise_var);

struct TrialOptions {
  Criterion criterion = Criterion::kMmse;
  std::vector<std::size_t> candidates{4};  // M_u, one value or one per user
  bool measure_time = true;
};

struct TrialOutcome {
  double sum_rate = 0.0;
  double design_seconds = 0.0;  // codeword selection + digital precoding only
  bool failed = false;
  bool conflict = false;    // two users share an analog codeword
  bool degenerate = false;  // a ZF inverse had to be regularized
  std::string error;
};

/// One precoder design and rate evaluation on a given channel realization.
/// Module errors are caught and reported through `failed`/`error`.
TrialOutcome run_trial(const FreqChannel& channel, const Codebook& codebook, const SystemParams& params,
                       SchemeId scheme, const TrialOptions& options);

/// Generates the channel of trial `trial` (from params.master_seed) and runs it.
TrialOutcome run_trial(const SystemParams& params, SchemeId scheme, std::uint64_t trial,
                       const TrialOptions& options);

enum class SweepAxis { kSnrDb, kUsers };

std::string axis_name(SweepAxis axis);

struct SweepConfig {
  SystemParams base;
  SweepAxis axis = SweepAxis::kSnrDb;
  std::vector<double> snr_db{14.0};      // swept on kSnrDb, otherwise exactly one value
  std::vector<std::size_t> users{16};    // swept on kUsers, otherwise ignored (base.n_users)
  std::vector<SchemeId> schemes{SchemeId::kProposed, SchemeId::kGreedyConflictAgnostic,
                                SchemeId::kFullyDigital};
  std::size_t n_trials = 2000;
  TrialOptions trial;
  unsigned threads = 1;  // 0 = hardware concurrency; never affects results

  std::uint64_t master_seed() const { return base.master_seed; }
  std::vector<double> axis_values() const;
  // Parameters at one sweep point (n_users and total_power resolved).
  SystemParams params_at(double axis_value) const;
  void validate() const;
};

// Canonical key=value text of every result-affecting setting (threads excluded).
std::string canonical_form(const SweepConfig& config);
// 64-bit FNV-1a of canonical_form.
std::uint64_t config_hash(const SweepConfig& config);

struct ResultRow {
  SchemeId scheme = SchemeId::kProposed;
  std::string axis_name;
  double axis_value = 0.0;
  double mean_sum_rate = 0.0;
  double stderr_sum_rate = 0.0;
  double mean_per_user_rate = 0.0;
  double median_design_time_s = 0.0;
  std::size_t n_trials = 0;
  std::size_t n_failures = 0;
  std::uint64_t seed = 0;

  bool operator==(const ResultRow&) const = default;
};

struct ResultTable {
  std::vector<ResultRow> rows;  // ordered by scheme, then axis value ascending
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
  std::string version;
  std::string config;  // canonical_form of the producing config

  bool operator==(const ResultTable&) const = default;
};

// Per-trial outcomes for every (scheme, axis value) pair.
struct SweepSamples {
  std::vector<SchemeId> schemes;
  std::vector<double> axis_values;
  // outcomes[s][a][t]: scheme s, axis value a, trial t.
  std::vector<std::vector<std::vector<TrialOutcome>>> outcomes;

  const std::vector<TrialOutcome>& at(SchemeId scheme, std::size_t axis_index) const;
};

struct SweepResult {
  ResultTable table;
  SweepSamples samples;
};

/// Monte Carlo sweep with common random numbers: trial t uses the same
/// channel realization for every scheme and every SNR point, and for the
/// users axis the U-user channel extends the (U-1)-user one.
SweepResult run_sweep_detailed(const SweepConfig& config);
ResultTable run_sweep(const SweepConfig& config);

// Sequential reduction of one cell's outcomes into a row.
ResultRow summarize(SchemeId scheme, SweepAxis axis, double axis_value, std::size_t n_users,
                    const std::vector<TrialOutcome>& outcomes, std::uint64_t seed);

}  // namespace hbf

#endif  // HBF_EXPERIMENT_HPP
