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

#ifndef HBF_TYPES_HPP
#define HBF_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

// Thrown for any dimension or shape mismatch between model objects.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Criterion { kZf, kMmse };

std::string to_string(Criterion c);
Criterion parse_criterion(const std::string& s);

// All scalar model constants. Defaults reproduce the reference setup:
// N=128 ULA antennas, U=S=16, K=16 subcarriers, N_c=4 taps, L=4 paths,
// beta_u=0.25, T_s=1/1760 us, alpha_1 ~ CN(0,1), alpha_{l>=2} ~ CN(0,0.1).
struct SystemParams {
  std::size_t n_antennas = 128;
  std::size_t n_users = 16;
  std::size_t n_rf_chains = 16;
  std::size_t n_subcarriers = 16;
  std::size_t n_taps = 4;
  std::size_t n_paths = 4;
  double path_loss = 0.25;
  // Optional per-user override of path_loss; empty means "all users use path_loss".
  std::vector<double> path_loss_per_user;
  double sampling_period = 1.0 / 1760.0 * 1e-6;  // seconds
  double total_power = 1.0;                      // rho, linear
  double noise_var = 1.0;                        // sigma^2, linear
  double spacing_ratio = 0.5;                    // antenna spacing / wavelength
  double strong_path_var = 1.0;
  double weak_path_var = 0.1;
  std::uint64_t master_seed = 1;

  double beta(std::size_t user) const {
    return path_loss_per_user.empty() ? path_loss : path_loss_per_user.at(user);
  }

  // rho / (K U): the per-stream transmit power on one subcarrier.
  double stream_power() const {
    return total_power / (static_cast<double>(n_subcarriers) * static_cast<double>(n_users));
  }

  // Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

}  // namespace hbf

#endif  // HBF_TYPES_HPP
