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

#include "hbf/rate.hpp"

#include <cmath>
#include <string>

#include "hbf/precoding.hpp"

namespace hbf {

double sinr_rate(double signal, double interference, double scale, double noise) {
  return std::log2(1.0 + scale * signal / (scale * interference + noise));
}

double composite_user_rate(const CRowVector& h_row, const CMatrix& composite, std::size_t user,
                           const SystemParams& params) {
  if (h_row.size() != composite.rows())
    throw DimensionError("per_user_rate: channel row length " + std::to_string(h_row.size()) +
                         " does not match precoder rows " + std::to_string(composite.rows()));
  if (user >= static_cast<std::size_t>(composite.cols()))
    throw DimensionError("per_user_rate: user index out of range");
  const CRowVector gains = h_row * composite;
  double interference = 0.0;
  for (Eigen::Index i = 0; i < gains.size(); ++i) {
    if (static_cast<std::size_t>(i) != user) interference += std::norm(gains(i));
  }
  const double signal = std::norm(gains(static_cast<Eigen::Index>(user)));
  return sinr_rate(signal, interference, params.stream_power(), params.noise_var);
}

double per_user_rate(const CRowVector& h_row, const CMatrix& analog, const CMatrix& digital,
                     std::size_t user, const SystemParams& params) {
  if (analog.cols() != digital.rows())
    throw DimensionError("per_user_rate: analog columns do not match digital rows");
  return composite_user_rate(h_row, analog * digital, user, params);
}

double if_rate(const CRowVector& h_row, const CVector& codeword, const SystemParams& params) {
  if (h_row.size() != codeword.size()) throw DimensionError("if_rate: length mismatch");
  const double gain = std::norm((h_row * codeword).value());
  return std::log2(1.0 + params.total_power * gain /
                             (static_cast<double>(params.n_subcarriers) *
                              static_cast<double>(params.n_users) * params.noise_var));
}

RateReport sum_rate(const FreqChannel& channel, const std::vector<CMatrix>& composite,
                    const SystemParams& params) {
  const std::size_t k_count = channel.n_subcarriers();
  const std::size_t n_users = channel.n_users();
  if (composite.size() != k_count)
    throw DimensionError("sum_rate: need one precoder per subcarrier");
  RateReport report;
  report.per_user_per_subcarrier = RMatrix::Zero(static_cast<Eigen::Index>(n_users),
                                                 static_cast<Eigen::Index>(k_count));
  double total = 0.0;
  for (std::size_t k = 0; k < k_count; ++k) {
    if (static_cast<std::size_t>(composite[k].cols()) != n_users)
      throw DimensionError("sum_rate: precoder must have one column per user");
    for (std::size_t u = 0; u < n_users; ++u) {
      const double r =
          composite_user_rate(channel[k].row(static_cast<Eigen::Index>(u)), composite[k], u, params);
      report.per_user_per_subcarrier(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(k)) = r;
      total += r;
    }
  }
  report.sum_rate = total / static_cast<double>(k_count);
  return report;
}

RateReport sum_rate(const FreqChannel& channel, const HybridPrecoder& precoder,
                    const SystemParams& params) {
  return sum_rate(channel, precoder.composite(), params);
}

}  // namespace hbf
