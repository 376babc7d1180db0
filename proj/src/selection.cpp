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

#include "hbf/selection.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "hbf/hungarian.hpp"

namespace hbf {

Eigen::MatrixXi Assignment::matrix() const {
  Eigen::MatrixXi p = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(selected.size()),
                                            static_cast<Eigen::Index>(n_codewords));
  for (std::size_t u = 0; u < selected.size(); ++u) {
    p(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(selected[u])) = 1;
  }
  return p;
}

std::vector<std::size_t> Assignment::one_based() const {
  std::vector<std::size_t> out(selected);
  for (auto& n : out) ++n;
  return out;
}

bool Assignment::conflict_free() const {
  std::vector<std::size_t> sorted(selected);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool AnalogPrecoder::has_conflict() const {
  return !Assignment{codeword_indices, 0}.conflict_free();
}

AnalogPrecoder make_analog_precoder(const Codebook& codebook, const std::vector<std::size_t>& indices) {
  AnalogPrecoder out;
  out.codeword_indices = indices;
  out.matrix.resize(static_cast<Eigen::Index>(codebook.n_antennas()),
                    static_cast<Eigen::Index>(indices.size()));
  for (std::size_t u = 0; u < indices.size(); ++u) {
    if (indices[u] >= codebook.size()) throw DimensionError("codeword index out of range");
    out.matrix.col(static_cast<Eigen::Index>(u)) = codebook.codeword(indices[u]);
  }
  return out;
}

RMatrix if_rate_table(const FreqChannel& channel, const Codebook& codebook, const SystemParams& params) {
  if (channel.n_antennas() != codebook.n_antennas())
    throw DimensionError("if_rate_table: channel has " + std::to_string(channel.n_antennas()) +
                         " antennas but codebook has " + std::to_string(codebook.n_antennas()));
  const double snr_scale = params.total_power / (static_cast<double>(params.n_subcarriers) *
                                                 static_cast<double>(params.n_users) * params.noise_var);
  RMatrix table = RMatrix::Zero(static_cast<Eigen::Index>(channel.n_users()),
                                static_cast<Eigen::Index>(codebook.size()));
  for (const CMatrix& h : channel.per_subcarrier) {
    const CMatrix gains = h * codebook.matrix();
    table += (1.0 + snr_scale * gains.cwiseAbs2().array()).log2().matrix();
  }
  table /= static_cast<double>(channel.n_subcarriers());
  return table;
}

double threshold_gamma(const RVector& row, std::size_t m_u, bool allow_single_candidate) {
  const std::size_t min_m = allow_single_candidate ? 1 : 2;
  if (m_u < min_m)
    throw std::invalid_argument("threshold_gamma: candidate count must be >= " + std::to_string(min_m));
  if (m_u > static_cast<std::size_t>(row.size()))
    throw std::invalid_argument("threshold_gamma: candidate count " + std::to_string(m_u) +
                                " exceeds row length " + std::to_string(row.size()));
  std::vector<double> values(row.data(), row.data() + row.size());
  const auto nth = values.begin() + static_cast<std::ptrdiff_t>(m_u - 1);
  std::nth_element(values.begin(), nth, values.end(), std::greater<>());
  return *nth;
}

CostMatrix build_cost_matrix(const RMatrix& table, const std::vector<std::size_t>& m,
                             bool allow_single_candidate) {
  const auto n_users = static_cast<std::size_t>(table.rows());
  if (m.size() != 1 && m.size() != n_users)
    throw std::invalid_argument("build_cost_matrix: need one candidate count or one per user");
  CostMatrix cost;
  cost.values = RMatrix::Zero(table.rows(), table.cols());
  cost.thresholds.resize(n_users);
  cost.candidate_counts.resize(n_users);
  for (std::size_t u = 0; u < n_users; ++u) {
    const auto r = static_cast<Eigen::Index>(u);
    const std::size_t m_u = m.size() == 1 ? m.front() : m[u];
    const double gamma = threshold_gamma(table.row(r).transpose(), m_u, allow_single_candidate);
    cost.thresholds[u] = gamma;
    cost.candidate_counts[u] = m_u;
    for (Eigen::Index n = 0; n < table.cols(); ++n) {
      if (table(r, n) >= gamma) cost.values(r, n) = table(r, n);
    }
  }
  return cost;
}

PreprocessedCost preprocess(const CostMatrix& cost) {
  const RMatrix& t = cost.values;
  const auto n_users = static_cast<std::size_t>(t.rows());
  const auto n_cols = static_cast<std::size_t>(t.cols());
  if (n_cols < n_users)
    throw std::invalid_argument("preprocess: " + std::to_string(n_cols) + " codewords cannot serve " +
                                std::to_string(n_users) + " users");

  std::vector<bool> keep(n_cols);
  std::size_t kept = 0;
  for (std::size_t n = 0; n < n_cols; ++n) {
    keep[n] = (t.col(static_cast<Eigen::Index>(n)).array() != 0.0).any();
    if (keep[n]) ++kept;
  }
  // Too few candidates: put back removed zero columns, lowest index first.
  for (std::size_t n = 0; n < n_cols && kept < n_users; ++n) {
    if (!keep[n]) {
      keep[n] = true;
      ++kept;
    }
  }

  PreprocessedCost out;
  for (std::size_t n = 0; n < n_cols; ++n) {
    if (keep[n]) out.column_map.push_back(n);
  }
  const auto n_prime = static_cast<Eigen::Index>(out.column_map.size());
  RMatrix reduced(t.rows(), n_prime);
  for (Eigen::Index j = 0; j < n_prime; ++j) {
    reduced.col(j) = t.col(static_cast<Eigen::Index>(out.column_map[static_cast<std::size_t>(j)]));
  }
  out.max_entry = reduced.size() > 0 ? reduced.maxCoeff() : 0.0;
  out.delta_n = out.column_map.size() - n_users;
  out.square = RMatrix::Zero(n_prime, n_prime);
  out.square.topRows(t.rows()) = (out.max_entry - reduced.array()).matrix();
  return out;
}

double SelectionResult::objective() const {
  double total = 0.0;
  for (std::size_t u = 0; u < assignment.selected.size(); ++u) {
    total += cost.values(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(assignment.selected[u]));
  }
  return total;
}

SelectionResult select_from_cost(const CostMatrix& cost) {
  SelectionResult result;
  result.cost = cost;
  result.preprocessed = preprocess(cost);
  result.solver_permutation = hungarian_solve(result.preprocessed.square);

  const auto n_users = static_cast<std::size_t>(cost.values.rows());
  // Rows beyond U are the padding rows; only the first U carry users.
  result.assignment.n_codewords = static_cast<std::size_t>(cost.values.cols());
  result.assignment.selected.resize(n_users);
  for (std::size_t u = 0; u < n_users; ++u) {
    result.assignment.selected[u] = result.preprocessed.column_map[result.solver_permutation[u]];
  }
  for (std::size_t u = 0; u < n_users; ++u) {
    if ((cost.values.row(static_cast<Eigen::Index>(u)).array() == 0.0).all()) {
      result.warnings.push_back("user " + std::to_string(u + 1) +
                                " has no nonzero candidate codeword; assigned codeword " +
                                std::to_string(result.assignment.selected[u] + 1) +
                                " with zero utility");
    }
  }
  return result;
}

SelectionResult select_codewords(const FreqChannel& channel, const Codebook& codebook,
                                 const SystemParams& params, const std::vector<std::size_t>& m,
                                 bool allow_single_candidate) {
  if (codebook.size() < channel.n_users())
    throw std::invalid_argument("select_codewords: fewer codewords than users");
  SelectionResult result =
      select_from_cost(build_cost_matrix(if_rate_table(channel, codebook, params), m, allow_single_candidate));
  result.analog = make_analog_precoder(codebook, result.assignment.selected);
  return result;
}

}  // namespace hbf
