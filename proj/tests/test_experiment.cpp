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

#include "doctest.h"
#include "hbf/experiment.hpp"
#include "hbf/precoding.hpp"
#include "hbf/rate.hpp"
#include "hbf/selection.hpp"

#include <cmath>

using namespace hbf;

namespace {

SystemParams small(std::size_t n, std::size_t u, std::size_t k) {
  SystemParams p;
  p.n_antennas = n;
  p.n_users = u;
  p.n_rf_chains = u;
  p.n_subcarriers = k;
  p.n_taps = std::min<std::size_t>(4, k);
  p.total_power = total_power_for_snr(10.0, u, p.noise_var);
  return p;
}

SweepConfig small_sweep() {
  SweepConfig c;
  c.base = small(16, 3, 4);
  c.snr_db = {0.0, 10.0};
  c.n_trials = 12;
  c.trial.measure_time = false;
  return c;
}

}  // namespace

TEST_CASE("SNR to total power") {
  CHECK(total_power_for_snr(0.0, 4, 1.0) == doctest::Approx(4.0));
  CHECK(total_power_for_snr(10.0, 2, 0.5) == doctest::Approx(10.0));
}

TEST_CASE("run_trial is deterministic per trial index") {
  const SystemParams p = small(16, 3, 4);
  TrialOptions o;
  o.measure_time = false;
  for (SchemeId s : {SchemeId::kProposed, SchemeId::kGreedyConflictAgnostic, SchemeId::kFullyDigital}) {
    const TrialOutcome a = run_trial(p, s, 5, o);
    const TrialOutcome b = run_trial(p, s, 5, o);
    CHECK(!a.failed);
    CHECK(a.sum_rate == b.sum_rate);
    CHECK(a.design_seconds == 0.0);
  }
}

TEST_CASE("ZF rates depend on the SNR only") {
  const SystemParams p = small(16, 3, 4);
  SystemParams q = p;
  q.total_power *= 4.0;
  q.noise_var *= 4.0;
  TrialOptions o;
  o.criterion = Criterion::kZf;
  for (SchemeId s : {SchemeId::kProposed, SchemeId::kFullyDigital}) {
    CHECK(run_trial(p, s, 2, o).sum_rate == doctest::Approx(run_trial(q, s, 2, o).sum_rate).epsilon(1e-12));
  }
}

TEST_CASE("proposed trial equals its explicit composition") {
  const SystemParams p = small(8, 2, 2);
  TrialOptions o;
  o.criterion = Criterion::kMmse;
  const FreqChannel ch = generate_channel(p, 9);
  const Codebook cb = dft_codebook(8);
  const SelectionResult sel = select_codewords(ch, cb, p, o.candidates);
  const HybridPrecoder hp = design_hybrid(ch, sel.analog, p, Criterion::kMmse);
  const double expected = sum_rate(ch, hp, p).sum_rate;
  CHECK(run_trial(ch, cb, p, SchemeId::kProposed, o).sum_rate == expected);
}

TEST_CASE("failed trials are recorded, not thrown") {
  SystemParams p = small(8, 2, 2);
  FreqChannel ch;
  ch.per_subcarrier = {CMatrix::Zero(2, 8), CMatrix::Zero(2, 8)};
  const TrialOutcome t = run_trial(ch, dft_codebook(8), p, SchemeId::kFullyDigital, TrialOptions{});
  CHECK(t.failed);
  CHECK(!t.error.empty());
}

TEST_CASE("sum rate grows with SNR for a fixed ZF realization") {
  SweepConfig c = small_sweep();
  c.snr_db = {0, 2, 4, 6, 8, 10, 12, 14};
  c.trial.criterion = Criterion::kZf;
  const SweepResult r = run_sweep_detailed(c);
  for (std::size_t s = 0; s < c.schemes.size(); ++s) {
    for (std::size_t t = 0; t < c.n_trials; ++t) {
      for (std::size_t a = 1; a < c.snr_db.size(); ++a) {
        CHECK(r.samples.outcomes[s][a][t].sum_rate > r.samples.outcomes[s][a - 1][t].sum_rate);
      }
    }
  }
}

TEST_CASE("sweep shape, ordering and per-user mean") {
  SweepConfig c = small_sweep();
  c.schemes = {SchemeId::kFullyDigital, SchemeId::kProposed};
  c.snr_db = {10.0, 0.0};
  const ResultTable t = run_sweep(c);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[0].scheme == SchemeId::kProposed);
  CHECK(t.rows[0].axis_value == 0.0);
  CHECK(t.rows[1].axis_value == 10.0);
  CHECK(t.rows[2].scheme == SchemeId::kFullyDigital);
  for (const ResultRow& row : t.rows) {
    CHECK(row.n_trials == 12);
    CHECK(row.n_failures == 0);
    CHECK(row.mean_per_user_rate == doctest::Approx(row.mean_sum_rate / 3.0));
    CHECK(row.axis_name == "snr_db");
    CHECK(row.seed == c.base.master_seed);
  }
  CHECK(t.config_hash == config_hash(c));
}

TEST_CASE("single trial gives one row per scheme with zero stderr") {
  SweepConfig c = small_sweep();
  c.snr_db = {5.0};
  c.n_trials = 1;
  const ResultTable t = run_sweep(c);
  REQUIRE(t.rows.size() == 3);
  for (const ResultRow& row : t.rows) CHECK(row.stderr_sum_rate == 0.0);
}

TEST_CASE("schemes share channel realizations") {
  SweepConfig c = small_sweep();
  const SweepResult r = run_sweep_detailed(c);
  const SystemParams p = c.params_at(10.0);
  for (std::size_t t = 0; t < c.n_trials; ++t) {
    const FreqChannel ch = generate_channel(p, t);
    const TrialOutcome direct = run_trial(ch, dft_codebook(16), p, SchemeId::kGreedyConflictAgnostic, c.trial);
    CHECK(r.samples.at(SchemeId::kGreedyConflictAgnostic, 1)[t].sum_rate == direct.sum_rate);
  }
}

TEST_CASE("results do not depend on the thread count") {
  SweepConfig c = small_sweep();
  c.threads = 1;
  const ResultTable a = run_sweep(c);
  c.threads = 4;
  const ResultTable b = run_sweep(c);
  CHECK(a == b);
}

TEST_CASE("users sweep regenerates channels per user count") {
  SweepConfig c;
  c.base = small(16, 4, 4);
  c.axis = SweepAxis::kUsers;
  c.users = {2, 4};
  c.snr_db = {10.0};
  c.n_trials = 5;
  c.trial.measure_time = false;
  const ResultTable t = run_sweep(c);
  REQUIRE(t.rows.size() == 6);
  CHECK(t.rows[0].axis_name == "users");
  CHECK(t.rows[0].mean_per_user_rate == doctest::Approx(t.rows[0].mean_sum_rate / 2.0));
  CHECK(t.rows[1].mean_per_user_rate == doctest::Approx(t.rows[1].mean_sum_rate / 4.0));
}

TEST_CASE("summary statistics") {
  std::vector<TrialOutcome> o(4);
  o[0].sum_rate = 1.0;
  o[1].sum_rate = 3.0;
  o[2].sum_rate = 5.0;
  o[3].failed = true;
  o[0].design_seconds = 0.3;
  o[1].design_seconds = 0.1;
  o[2].design_seconds = 0.2;
  const ResultRow r = summarize(SchemeId::kProposed, SweepAxis::kSnrDb, 4.0, 2, o, 7);
  CHECK(r.mean_sum_rate == doctest::Approx(3.0));
  CHECK(r.stderr_sum_rate == doctest::Approx(std::sqrt(4.0 / 3.0)));
  CHECK(r.mean_per_user_rate == doctest::Approx(1.5));
  CHECK(r.median_design_time_s == doctest::Approx(0.2));
  CHECK(r.n_trials == 4);
  CHECK(r.n_failures == 1);

  std::vector<TrialOutcome> all_failed(2);
  for (auto& t : all_failed) t.failed = true;
  CHECK(std::isnan(summarize(SchemeId::kProposed, SweepAxis::kSnrDb, 0.0, 2, all_failed, 7).mean_sum_rate));
}

TEST_CASE("sweep config validation") {
  SweepConfig c = small_sweep();
  c.n_trials = 0;
  CHECK_THROWS(c.validate());
  c = small_sweep();
  c.trial.candidates = {1};
  CHECK_THROWS(c.validate());
  c = small_sweep();
  c.base.n_subcarriers = 2;
  CHECK_THROWS(c.validate());
  c = small_sweep();
  c.threads = 3;
  SweepConfig d = small_sweep();
  CHECK(config_hash(c) == config_hash(d));
  d.n_trials = 13;
  CHECK(config_hash(c) != config_hash(d));
}
