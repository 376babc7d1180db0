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

#ifndef HBF_SELECTION_HPP
#define HBF_SELECTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hbf/channel.hpp"
#include "hbf/codebook.hpp"
#include "hbf/types.hpp"

namespace hbf {

// Thresholded interference-free rate matrix T (U x N).
struct CostMatrix {
  RMatrix values;
  std::vector<double> thresholds;             // gamma_u
  std::vector<std::size_t> candidate_counts;  // M_u
};

// selected[u] is the 0-based codeword index serving user u.
struct Assignment {
  std::vector<std::size_t> selected;
  std::size_t n_codewords = 0;

  // Binary U x N selection matrix P.
  Eigen::MatrixXi matrix() const;
  // 1-based codeword indices, as used in all external output.
  std::vector<std::size_t> one_based() const;
  bool conflict_free() const;
};

// N x U analog precoder; column u is codeword codeword_indices[u].
struct AnalogPrecoder {
  CMatrix matrix;
  std::vector<std::size_t> codeword_indices;

  std::size_t n_users() const { return codeword_indices.size(); }
  bool has_conflict() const;
};

AnalogPrecoder make_analog_precoder(const Codebook& codebook, const std::vector<std::size_t>& indices);

// Square minimization problem handed to the assignment solver.
struct PreprocessedCost {
  RMatrix square;                       // N' x N', rows >= U are zero padding
  std::vector<std::size_t> column_map;  // column j of `square` -> original 0-based column of T
  std::size_t delta_n = 0;              // number of padded rows, N' - U
  double max_entry = 0.0;               // t, the largest entry of the reduced T'
};

/// Entry (u, n) is (1/K) sum_k if_rate(h_u[k], f_c(n)).
RMatrix if_rate_table(const FreqChannel& channel, const Codebook& codebook, const SystemParams& params);

/// The m_u-th largest entry of `row`, counting duplicates. Requires
/// 2 <= m_u <= N unless allow_single_candidate is set (then 1 <= m_u).
double threshold_gamma(const RVector& row, std::size_t m_u, bool allow_single_candidate = false);

/// T(u, n) = table(u, n) if table(u, n) >= gamma_u, else 0. `m` holds one
/// M_u per user, or a single value applied to every user.
CostMatrix build_cost_matrix(const RMatrix& table, const std::vector<std::size_t>& m,
                             bool allow_single_candidate = false);

/// Drops all-zero columns (re-adding the lowest-index ones when fewer than U
/// remain), converts to a minimization by t - T', and pads with zero rows to
/// a square matrix. Throws std::invalid_argument if T has fewer than U columns.
PreprocessedCost preprocess(const CostMatrix& cost);

struct SelectionResult {
  Assignment assignment;
  AnalogPrecoder analog;
  CostMatrix cost;
  PreprocessedCost preprocessed;
  std::vector<std::size_t> solver_permutation;  // raw solver output on preprocessed.square
  std::vector<std::string> warnings;

  double objective() const;  // sum_u T(u, selected[u])
};

/// Solves the conflict-free assignment on an existing cost matrix.
SelectionResult select_from_cost(const CostMatrix& cost);

/// Full Hungarian-based codeword selection:
/// if_rate_table -> build_cost_matrix -> preprocess -> hungarian_solve ->
/// drop padded rows -> map columns back -> assemble the analog precoder.
SelectionResult select_codewords(const FreqChannel& channel, const Codebook& codebook,
                                 const SystemParams& params, const std::vector<std::size_t>& m,
                                 bool allow_single_candidate = false);

}  // namespace hbf

#endif  // HBF_SELECTION_HPP
