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

#include "hbf/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "hbf/channel.hpp"
#include "hbf/codebook.hpp"
#include "hbf/hungarian.hpp"
#include "hbf/precoding.hpp"
#include "hbf/rng.hpp"
#include "hbf/selection.hpp"

namespace hbf {

namespace {

double brute_force_min(const RMatrix& cost) {
  std::vector<std::size_t> perm(static_cast<std::size_t>(cost.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, assignment_cost(cost, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool check_assignment() {
  RandomStream rng(0x5eed);
  for (int trial = 0; trial < 200; ++trial) {
    RMatrix c(6, 6);
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.uniform(0.0, 10.0);
    if (assignment_cost(c, hungarian_solve(c)) != brute_force_min(c)) return false;
  }
  return true;
}

bool check_codebook() {
  for (std::size_t n : {2u, 16u, 64u}) {
    const Codebook cb = dft_codebook(n, 0.5);
    const CMatrix gram = cb.matrix().adjoint() * cb.matrix();
    if ((gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > 1e-12) return false;
  }
  return true;
}

bool check_dft() {
  SystemParams p;
  p.n_antennas = 16;
  p.n_users = 2;
  p.n_rf_chains = 2;
  RandomStream rng(7);
  const TapChannel taps = tap_channel(draw_paths(p, rng), p);
  const FreqChannel freq = to_frequency(taps, p);
  for (std::size_t u = 0; u < p.n_users; ++u) {
    for (std::size_t k = 0; k < p.n_subcarriers; ++k) {
      for (Eigen::Index q = 0; q < 16; ++q) {
        Complex direct = 0.0;
        for (Eigen::Index d = 0; d < taps.taps[u].rows(); ++d) {
          direct += taps.taps[u](d, q) *
                    std::exp(Complex(0.0, -2.0 * kPi * static_cast<double>(k) * static_cast<double>(d) /
                                              static_cast<double>(p.n_subcarriers)));
        }
        if (std::abs(direct - freq[k](static_cast<Eigen::Index>(u), q)) > 1e-12 * (1.0 + std::abs(direct)))
          return false;
      }
    }
  }
  return true;
}

bool check_zf() {
  SystemParams p;
  p.n_antennas = 32;
  p.n_users = 4;
  p.n_rf_chains = 4;
  p.n_subcarriers = 8;
  const Codebook cb = dft_codebook(p.n_antennas);
  for (std::uint64_t t = 0; t < 20; ++t) {
    const FreqChannel ch = generate_channel(p, t);
    const SelectionResult sel = select_codewords(ch, cb, p, {4});
    const HybridPrecoder hp = design_hybrid(ch, sel.analog, p, Criterion::kZf);
    const auto comp = hp.composite();
    for (std::size_t k = 0; k < p.n_subcarriers; ++k) {
      const CMatrix g = ch[k] * comp[k];
      if (std::abs(comp[k].squaredNorm() - static_cast<double>(p.n_users)) > 1e-9) return false;
      for (Eigen::Index u = 0; u < g.rows(); ++u) {
        for (Eigen::Index i = 0; i < g.cols(); ++i) {
          if (i != u && std::abs(g(u, i)) > 1e-9 * std::abs(g(u, u))) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool run_selftest(std::ostream& os) {
  const std::pair<const char*, std::function<bool()>> checks[] = {
      {"assignment matches exhaustive search (200 x 6x6)", check_assignment},
      {"DFT codebook Gram matrix is identity", check_codebook},
      {"per-subcarrier channel matches direct DFT sum", check_dft},
      {"ZF hybrid precoder nulls interference at unit column power", check_zf},
  };
  bool all = true;
  for (const auto& [name, fn] : checks) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      os << "  error: " << e.what() << '\n';
    }
    os << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    all = all && ok;
  }
  return all;
}

}  // namespace hbf
