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
#include "hbf/codebook.hpp"
#include "hbf/rate.hpp"
#include "hbf/rng.hpp"
#include "hbf/selection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

using namespace hbf;

namespace {

RMatrix rows(std::initializer_list<std::initializer_list<double>> values) {
  RMatrix m(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : values) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

CostMatrix unthresholded(const RMatrix& t) {
  CostMatrix c;
  c.values = t;
  c.thresholds.assign(static_cast<std::size_t>(t.rows()), 0.0);
  c.candidate_counts.assign(static_cast<std::size_t>(t.rows()), static_cast<std::size_t>(t.cols()));
  return c;
}

// Maximum of sum_u T(u, map[u]) over all injective user -> column maps.
double brute_force_max(const RMatrix& t) {
  const auto u_count = static_cast<std::size_t>(t.rows());
  const auto n_count = static_cast<std::size_t>(t.cols());
  std::vector<bool> used(n_count, false);
  double best = -std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, double)> rec = [&](std::size_t u, double acc) {
    if (u == u_count) {
      best = std::max(best, acc);
      return;
    }
    for (std::size_t n = 0; n < n_count; ++n) {
      if (used[n]) continue;
      used[n] = true;
      rec(u + 1, acc + t(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(n)));
      used[n] = false;
    }
  };
  rec(0, 0.0);
  return best;
}

// Literal threshold rule: keep x when x >= gamma.
RMatrix literal_threshold(const RMatrix& table, std::size_t m) {
  RMatrix out = RMatrix::Zero(table.rows(), table.cols());
  for (Eigen::Index u = 0; u < table.rows(); ++u) {
    std::vector<double> sorted;
    for (Eigen::Index n = 0; n < table.cols(); ++n) sorted.push_back(table(u, n));
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const double gamma = sorted[m - 1];
    for (Eigen::Index n = 0; n < table.cols(); ++n) out(u, n) = table(u, n) >= gamma ? table(u, n) : 0.0;
  }
  return out;
}

SystemParams small_params(std::size_t n, std::size_t u, std::size_t k) {
  SystemParams p;
  p.n_antennas = n;
  p.n_users = u;
  p.n_rf_chains = u;
  p.n_subcarriers = k;
  p.n_taps = std::min<std::size_t>(4, k);
  p.total_power = 30.0;
  return p;
}

}  // namespace

TEST_CASE("threshold gamma order statistics") {
  const RVector row = (RVector(4) << 2, 3, 1, 4).finished();
  CHECK(threshold_gamma(row, 2) == 3.0);
  CHECK(threshold_gamma(RVector::Constant(4, 5.0), 2) == 5.0);
  CHECK(threshold_gamma(row, 4) == 1.0);
  CHECK(threshold_gamma(row, 1, true) == 4.0);
  CHECK_THROWS_AS(threshold_gamma(row, 1), std::invalid_argument);
  CHECK_THROWS_AS(threshold_gamma(row, 5), std::invalid_argument);
}

TEST_CASE("threshold gamma vs full sort on random rows") {
  RandomStream rng(4);
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<Eigen::Index>(2 + t % 30);
    RVector row(n);
    for (Eigen::Index i = 0; i < n; ++i) row(i) = std::floor(rng.uniform(0.0, 8.0)) + (t % 2 ? rng.uniform() : 0.0);
    const std::size_t m = 2 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(n - 1));
    std::vector<double> sorted(row.data(), row.data() + n);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    CHECK(threshold_gamma(row, m) == sorted[m - 1]);
  }
}

TEST_CASE("build cost matrix examples") {
  CHECK(build_cost_matrix(rows({{2, 3, 1, 4}}), {2}).values == rows({{0, 3, 0, 4}}));
  CHECK(build_cost_matrix(rows({{1, 5, 4, 2}}), {4}).values == rows({{1, 5, 4, 2}}));
  const RMatrix tied = rows({{5, 5, 5, 5}});
  const CostMatrix c = build_cost_matrix(tied, {2});
  CHECK(c.values == literal_threshold(tied, 2));
  CHECK(c.values == tied);
  CHECK(c.thresholds[0] == 5.0);
}

TEST_CASE("cost matrix invariants on random tables") {
  RandomStream rng(8);
  for (int t = 0; t < 200; ++t) {
    RMatrix table(3, 12);
    for (Eigen::Index i = 0; i < table.size(); ++i) table(i) = std::floor(rng.uniform(0.0, 6.0));
    const std::vector<std::size_t> m = {2, 3, 4};
    const CostMatrix c = build_cost_matrix(table, m);
    for (Eigen::Index u = 0; u < 3; ++u) {
      const auto& row = c.values.row(u);
      std::size_t kept = 0;
      for (Eigen::Index n = 0; n < 12; ++n) {
        if (table(u, n) >= c.thresholds[static_cast<std::size_t>(u)]) {
          ++kept;
          CHECK(row(n) == table(u, n));
        } else {
          CHECK(row(n) == 0.0);
        }
      }
      CHECK(kept >= m[static_cast<std::size_t>(u)]);
    }
  }
}

TEST_CASE("preprocess worked example") {
  const PreprocessedCost pc = preprocess(unthresholded(rows({{0, 3, 0, 4}, {0, 0, 7, 6}})));
  CHECK(pc.column_map == std::vector<std::size_t>{1, 2, 3});
  CHECK(pc.max_entry == 7.0);
  CHECK(pc.delta_n == 1);
  CHECK(pc.square == rows({{4, 7, 3}, {7, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("preprocess square input needs no padding") {
  const PreprocessedCost pc = preprocess(unthresholded(rows({{1, 2}, {3, 4}})));
  CHECK(pc.delta_n == 0);
  CHECK(pc.square == rows({{3, 2}, {1, 0}}));
}

TEST_CASE("preprocess re-adds lowest zero columns when too few candidates") {
  const PreprocessedCost all_zero = preprocess(unthresholded(RMatrix::Zero(3, 5)));
  CHECK(all_zero.column_map == std::vector<std::size_t>{0, 1, 2});
  CHECK(all_zero.square == RMatrix::Zero(3, 3));
  const SelectionResult sel = select_from_cost(unthresholded(RMatrix::Zero(3, 5)));
  CHECK(sel.assignment.selected == std::vector<std::size_t>{0, 1, 2});
  CHECK(sel.warnings.size() == 3);

  // Two users share the only nonzero column; column 0 comes back.
  const PreprocessedCost pc = preprocess(unthresholded(rows({{0, 0, 5, 0}, {0, 0, 2, 0}})));
  CHECK(pc.column_map == std::vector<std::size_t>{0, 2});
  CHECK_THROWS_AS(preprocess(unthresholded(RMatrix::Ones(3, 2))), std::invalid_argument);
}

TEST_CASE("selection without conflict equals per-user argmax") {
  const RMatrix t = rows({{9, 1, 0, 0}, {0, 0, 8, 2}});
  const SelectionResult sel = select_from_cost(unthresholded(t));
  CHECK(sel.assignment.selected == std::vector<std::size_t>{0, 2});
}

TEST_CASE("selection resolves a beam conflict") {
  const RMatrix t = rows({{0, 5, 7, 0}, {0, 0, 7, 6}});
  CHECK(brute_force_max(t) == 13.0);
  const SelectionResult sel = select_from_cost(unthresholded(t));
  CHECK(sel.assignment.one_based() == std::vector<std::size_t>{3, 4});
  CHECK(sel.objective() == 13.0);
  const Eigen::MatrixXi p = sel.assignment.matrix();
  CHECK(p.rowwise().sum() == Eigen::VectorXi::Ones(2));
  CHECK(p.colwise().sum().maxCoeff() == 1);
}

TEST_CASE("single user picks the row maximum") {
  const SelectionResult sel = select_from_cost(unthresholded(rows({{0.5, 2.5, 1.0}})));
  CHECK(sel.assignment.selected == std::vector<std::size_t>{1});
}

TEST_CASE("assignment optimality, duality and scale invariance on small instances") {
  RandomStream rng(31);
  for (int t = 0; t < 400; ++t) {
    const auto u = static_cast<Eigen::Index>(1 + t % 5);
    const auto n = u + static_cast<Eigen::Index>(rng.uniform() * static_cast<double>(11 - u));
    RMatrix table(u, n);
    // Coarse values so that ties and thresholding actually occur.
    for (Eigen::Index i = 0; i < table.size(); ++i) table(i) = std::floor(rng.uniform(0.0, 5.0)) * 0.5;
    const std::size_t m = n >= 2 ? 2 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(n - 1)) : 1;
    const CostMatrix cost = build_cost_matrix(table, {std::min<std::size_t>(m, static_cast<std::size_t>(n))}, n < 2);
    const SelectionResult sel = select_from_cost(cost);
    CHECK(sel.assignment.conflict_free());
    const Eigen::MatrixXi p = sel.assignment.matrix();
    CHECK(p.rowwise().sum() == Eigen::VectorXi::Ones(u));
    CHECK(p.colwise().sum().maxCoeff() <= 1);
    const double best = brute_force_max(cost.values);
    CHECK(sel.objective() == doctest::Approx(best).epsilon(1e-12));

    CostMatrix scaled = cost;
    scaled.values *= 3.0;
    const SelectionResult sel3 = select_from_cost(scaled);
    CHECK(sel3.objective() == doctest::Approx(3.0 * best).epsilon(1e-12));
  }
}

TEST_CASE("if-rate table matches the triple-loop oracle") {
  const SystemParams p = small_params(8, 3, 4);
  const Codebook cb = dft_codebook(8);
  const FreqChannel ch = generate_channel(p, 2);
  const RMatrix table = if_rate_table(ch, cb, p);
  for (Eigen::Index u = 0; u < 3; ++u) {
    for (Eigen::Index n = 0; n < 8; ++n) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        Complex g = 0.0;
        for (Eigen::Index q = 0; q < 8; ++q) g += ch[k](u, q) * cb.matrix()(q, n);
        acc += std::log2(1.0 + p.total_power * std::norm(g) / (4.0 * 3.0 * p.noise_var));
      }
      CHECK(std::abs(table(u, n) - acc / 4.0) < 1e-12);
    }
  }
  CHECK(table.minCoeff() >= 0.0);
}

TEST_CASE("if-rate table special cases") {
  SystemParams p = small_params(8, 1, 1);
  p.n_taps = 1;
  const Codebook cb = dft_codebook(8);
  FreqChannel ch;
  ch.per_subcarrier = {Complex(2.0, 0.0) * cb.codeword(5).adjoint()};
  const RMatrix table = if_rate_table(ch, cb, p);
  CHECK(table(0, 5) == doctest::Approx(if_rate(ch[0].row(0), cb.codeword(5), p)));

  FreqChannel zero;
  zero.per_subcarrier = {CMatrix::Zero(1, 8)};
  CHECK(if_rate_table(zero, cb, p).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("select_codewords end to end") {
  const SystemParams p = small_params(16, 4, 8);
  const Codebook cb = dft_codebook(16);
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    const FreqChannel ch = generate_channel(p, trial);
    const SelectionResult sel = select_codewords(ch, cb, p, {4});
    CHECK(sel.assignment.conflict_free());
    CHECK(sel.objective() == doctest::Approx(brute_force_max(sel.cost.values)).epsilon(1e-12));
    REQUIRE(sel.analog.matrix.cols() == 4);
    for (std::size_t u = 0; u < 4; ++u) {
      CHECK(sel.analog.matrix.col(static_cast<Eigen::Index>(u)) == cb.codeword(sel.assignment.selected[u]));
    }
    const CMatrix gram = sel.analog.matrix.adjoint() * sel.analog.matrix;
    CHECK((gram - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("select_codewords validates inputs") {
  const SystemParams p = small_params(8, 2, 2);
  const FreqChannel ch = generate_channel(p, 0);
  CHECK_THROWS_AS(select_codewords(ch, dft_codebook(4), p, {2}), DimensionError);
  CHECK_THROWS_AS(select_codewords(ch, dft_codebook(8), p, {1}), std::invalid_argument);
  CHECK_THROWS_AS(select_codewords(ch, dft_codebook(8), p, {9}), std::invalid_argument);
  CHECK_NOTHROW(select_codewords(ch, dft_codebook(8), p, {1}, true));
}
