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

#include "hbf/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hbf {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Munkres {
 public:
  explicit Munkres(const RMatrix& cost)
      : n_(static_cast<std::size_t>(cost.rows())),
        c_(cost),
        star_in_row_(n_, kNone),
        star_in_col_(n_, kNone),
        prime_in_row_(n_, kNone),
        row_covered_(n_, false),
        col_covered_(n_, false) {}

  std::vector<std::size_t> solve() {
    reduce();
    star_initial_zeros();
    while (cover_starred_columns() < n_) {
      // Prime uncovered zeros until one has no starred zero in its row.
      for (;;) {
        auto [r, c] = find_uncovered_zero();
        if (r == kNone) {
          adjust_by_uncovered_min();
          continue;
        }
        prime_in_row_[r] = c;
        if (star_in_row_[r] == kNone) {
          augment(r, c);
          break;
        }
        row_covered_[r] = true;
        col_covered_[star_in_row_[r]] = false;
      }
    }
    return star_in_row_;
  }

 private:
  double& at(std::size_t r, std::size_t c) {
    return c_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  // Subtract each row's minimum, then each column's minimum.
  void reduce() {
    for (Eigen::Index r = 0; r < c_.rows(); ++r) c_.row(r).array() -= c_.row(r).minCoeff();
    for (Eigen::Index c = 0; c < c_.cols(); ++c) c_.col(c).array() -= c_.col(c).minCoeff();
  }

  void star_initial_zeros() {
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (at(r, c) == 0.0 && star_in_row_[r] == kNone && star_in_col_[c] == kNone) {
          star_in_row_[r] = c;
          star_in_col_[c] = r;
        }
      }
    }
  }

  std::size_t cover_starred_columns() {
    std::size_t covered = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      col_covered_[c] = star_in_col_[c] != kNone;
      if (col_covered_[c]) ++covered;
    }
    return covered;
  }

  std::pair<std::size_t, std::size_t> find_uncovered_zero() {
    for (std::size_t r = 0; r < n_; ++r) {
      if (row_covered_[r]) continue;
      for (std::size_t c = 0; c < n_; ++c) {
        if (!col_covered_[c] && at(r, c) == 0.0) return {r, c};
      }
    }
    return {kNone, kNone};
  }

  // Subtract the smallest uncovered entry from every uncovered row and add it
  // to every covered column. Entries in exactly one covered line are left
  // untouched rather than computed as (x - m) + m, which keeps zeros exact.
  void adjust_by_uncovered_min() {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < n_; ++r) {
      if (row_covered_[r]) continue;
      for (std::size_t c = 0; c < n_; ++c) {
        if (!col_covered_[c] && at(r, c) < m) m = at(r, c);
      }
    }
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        if (!row_covered_[r] && !col_covered_[c]) {
          at(r, c) -= m;
        } else if (row_covered_[r] && col_covered_[c]) {
          at(r, c) += m;
        }
      }
    }
  }

  // Alternating path of primes and stars starting at the prime (r, c):
  // stars on the path are removed, primes become stars.
  void augment(std::size_t r, std::size_t c) {
    for (;;) {
      const std::size_t star_row = star_in_col_[c];
      star_in_row_[r] = c;
      star_in_col_[c] = r;
      if (star_row == kNone) break;
      r = star_row;
      c = prime_in_row_[r];
    }
    std::fill(prime_in_row_.begin(), prime_in_row_.end(), kNone);
    std::fill(row_covered_.begin(), row_covered_.end(), false);
  }

  std::size_t n_;
  RMatrix c_;
  std::vector<std::size_t> star_in_row_;
  std::vector<std::size_t> star_in_col_;
  std::vector<std::size_t> prime_in_row_;
  std::vector<bool> row_covered_;
  std::vector<bool> col_covered_;
};

}  // namespace

std::vector<std::size_t> hungarian_solve(const RMatrix& cost) {
  if (cost.rows() != cost.cols())
    throw DimensionError("hungarian_solve: cost matrix must be square (got " +
                         std::to_string(cost.rows()) + "x" + std::to_string(cost.cols()) + ")");
  if (!cost.allFinite()) throw std::invalid_argument("hungarian_solve: non-finite cost entry");
  if (cost.rows() == 0) return {};
  return Munkres(cost).solve();
}

double assignment_cost(const RMatrix& cost, const std::vector<std::size_t>& perm) {
  double total = 0.0;
  for (std::size_t r = 0; r < perm.size(); ++r) {
    total += cost(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(perm[r]));
  }
  return total;
}

}  // namespace hbf
