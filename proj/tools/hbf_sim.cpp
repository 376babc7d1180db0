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

// hbf_sim: command-line frontend for the hybrid precoding simulator.
//
//   hbf_sim sweep-snr   [options]   sum-rate vs. SNR
//   hbf_sim sweep-users [options]   sum-rate / per-user rate vs. number of users
//   hbf_sim single      [options]   one trial, optional debug dumps
//   hbf_sim selftest                built-in oracle checks

#include <cstdio>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hbf/channel.hpp"
#include "hbf/config.hpp"
#include "hbf/experiment.hpp"
#include "hbf/precoding.hpp"
#include "hbf/rate.hpp"
#include "hbf/report.hpp"
#include "hbf/selection.hpp"
#include "hbf/selftest.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  // flag name -> value, only for flags given on the command line
  std::map<std::string, std::string> values;
  std::string output = "-";
  std::string format = "csv";
  bool dump_debug = false;
  std::uint64_t trial = 0;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--config", o.config_path, "Flat key = value config file");
  static const char* const kValueFlags[][2] = {
      {"antennas", "Number of BS antennas N"},
      {"users", "Number of users U"},
      {"rf-chains", "Number of RF chains S"},
      {"subcarriers", "Number of OFDM subcarriers K"},
      {"taps", "Number of delay taps N_c"},
      {"paths", "Number of paths L per user"},
      {"snr-db", "SNR list in dB (comma separated), SNR = rho/(U sigma^2)"},
      {"users-list", "User counts for sweep-users (comma separated)"},
      {"trials", "Monte Carlo trials"},
      {"seed", "Master seed"},
      {"scheme", "Schemes: proposed,greedy,fully_digital"},
      {"criterion", "Digital precoder: zf | mmse"},
      {"candidates", "Candidate codewords per user M_u"},
      {"threads", "Worker threads (0 = all cores); results do not depend on it"},
      {"timing", "on | off; off writes zero design times for byte-stable output"},
  };
  for (const auto& flag : kValueFlags) {
    const std::string name = flag[0];
    app->add_option_function<std::string>(
        "--" + name, [&o, name](const std::string& v) { o.values[name] = v; }, flag[1]);
  }
  app->add_option("--output", o.output, "Output file ('-' = stdout; directory for single --dump-debug)");
  app->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app->add_flag("--dump-debug", o.dump_debug, "Write T, T', P, selections and power checks (single)");
}

hbf::KeyValues to_key_values(const CommonOptions& o) {
  hbf::KeyValues kv;
  for (const auto& [k, v] : o.values) kv.emplace_back(k, v);
  return kv;
}

std::optional<std::string> config_path(const CommonOptions& o) {
  if (o.config_path.empty()) return std::nullopt;
  return o.config_path;
}

void print_provenance(const hbf::SweepConfig& config) {
  std::fprintf(stderr, "# hbf-sim %s config_hash=%016llx seed=%llu\n", hbf::version_string().c_str(),
               static_cast<unsigned long long>(hbf::config_hash(config)),
               static_cast<unsigned long long>(config.master_seed()));
}

int run_sweep_command(hbf::SweepAxis axis, const CommonOptions& o) {
  const hbf::SweepConfig config = hbf::parse_config(axis, config_path(o), to_key_values(o));
  print_provenance(config);
  const hbf::ResultTable table = hbf::run_sweep(config);
  hbf::emit_results(table, hbf::parse_format(o.format), o.output);
  return 0;
}

void dump_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  body(out);
}

int run_single_command(const CommonOptions& o) {
  hbf::SweepConfig defaults = hbf::default_config(hbf::SweepAxis::kSnrDb);
  defaults.snr_db = {14.0};
  defaults.n_trials = 1;
  hbf::SweepConfig config = hbf::parse_config(defaults, config_path(o), to_key_values(o));
  print_provenance(config);

  const hbf::SystemParams params = config.params_at(config.snr_db.front());
  hbf::RandomStream rng = hbf::RandomStream::for_trial(params.master_seed, o.trial);
  const hbf::TapChannel taps = hbf::tap_channel(hbf::draw_paths(params, rng), params);
  const hbf::FreqChannel channel = hbf::to_frequency(taps, params);
  const hbf::Codebook codebook = hbf::dft_codebook(params.n_antennas, params.spacing_ratio);

  std::printf("trial %llu  N=%zu U=%zu K=%zu SNR=%s dB criterion=%s\n",
              static_cast<unsigned long long>(o.trial), params.n_antennas, params.n_users,
              params.n_subcarriers, hbf::format_number(config.snr_db.front()).c_str(),
              hbf::to_string(config.trial.criterion).c_str());
  for (hbf::SchemeId scheme : config.schemes) {
    const hbf::TrialOutcome t = hbf::run_trial(channel, codebook, params, scheme, config.trial);
    std::printf("  %-14s sum_rate=%s design_time_s=%s%s%s\n", hbf::to_string(scheme).c_str(),
                hbf::format_number(t.sum_rate).c_str(), hbf::format_number(t.design_seconds).c_str(),
                t.conflict ? " [beam conflict]" : "", t.failed ? (" FAILED: " + t.error).c_str() : "");
  }

  const hbf::SelectionResult sel =
      hbf::select_codewords(channel, codebook, params, config.trial.candidates);
  for (const std::string& w : sel.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("  selected codewords (1-based):");
  for (std::size_t n : sel.assignment.one_based()) std::printf(" %zu", n);
  std::printf("\n");

  if (o.dump_debug) {
    const std::filesystem::path dir = o.output == "-" ? std::filesystem::path("hbf_debug") : std::filesystem::path(o.output);
    std::filesystem::create_directories(dir);
    const hbf::HybridPrecoder hp = hbf::design_hybrid(channel, sel.analog, params, config.trial.criterion);
    dump_file(dir / "T.txt", [&](std::ostream& os) { hbf::write_matrix_text(os, sel.cost.values); });
    dump_file(dir / "T_prime.txt",
              [&](std::ostream& os) { hbf::write_matrix_text(os, sel.preprocessed.square); });
    dump_file(dir / "P.txt", [&](std::ostream& os) { hbf::write_matrix_text(os, sel.assignment.matrix()); });
    dump_file(dir / "selected.txt", [&](std::ostream& os) {
      os << "# user codeword (1-based)\n";
      const auto idx = sel.assignment.one_based();
      for (std::size_t u = 0; u < idx.size(); ++u) os << u + 1 << ' ' << idx[u] << '\n';
    });
    dump_file(dir / "power.txt", [&](std::ostream& os) {
      os << "# subcarrier ||F_RF F_BB[k]||_F^2\n";
      const auto comp = hp.composite();
      char buf[64];
      for (std::size_t k = 0; k < comp.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu %.17g\n", k, comp[k].squaredNorm());
        os << buf;
      }
    });
    dump_file(dir / "channel.txt", [&](std::ostream& os) {
      hbf::write_channel_dump(os, taps, params, hbf::config_hash(config), o.trial);
    });
    std::printf("  debug files written to %s\n", dir.string().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid precoding simulator for wideband multiuser mmWave massive MIMO"};
  app.set_version_flag("--version", hbf::version_string());
  app.require_subcommand(1);

  CommonOptions snr_opts, users_opts, single_opts;
  CLI::App* sweep_snr = app.add_subcommand("sweep-snr", "Sum-rate vs. SNR");
  add_common(sweep_snr, snr_opts);
  CLI::App* sweep_users = app.add_subcommand("sweep-users", "Sum-rate and per-user rate vs. U");
  add_common(sweep_users, users_opts);
  CLI::App* single = app.add_subcommand("single", "One trial with optional debug dumps");
  add_common(single, single_opts);
  single->add_option("--trial", single_opts.trial, "Trial index (selects the channel realization)");
  CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in oracle checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep_snr) return run_sweep_command(hbf::SweepAxis::kSnrDb, snr_opts);
    if (*sweep_users) return run_sweep_command(hbf::SweepAxis::kUsers, users_opts);
    if (*single) return run_single_command(single_opts);
    if (*selftest) return hbf::run_selftest(std::cout) ? 0 : 1;
  } catch (const hbf::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
