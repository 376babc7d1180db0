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

#ifndef HBF_CODEBOOK_HPP
#define HBF_CODEBOOK_HPP

#include <cstddef>
#include <vector>

#include "hbf/types.hpp"

namespace hbf {

/// ULA steering vector a(N, theta): entry q is
/// exp(j 2 pi (m/lambda) q sin(theta)) / sqrt(N), so the vector has unit norm.
/// Throws std::invalid_argument for n_antennas == 0, non-finite theta, or a
/// non-positive spacing ratio.
CVector steering_vector(std::size_t n_antennas, double theta, double spacing_ratio = 0.5);

/// DFT beam codebook. Codeword n (1-based n = 1..N) steers toward
/// asin(-1 + (2n - 1) / N). Storage is 0-based: codeword(i) is codeword n = i + 1.
class Codebook {
 public:
  Codebook(CMatrix codewords, std::vector<double> angles);

  std::size_t size() const { return angles_.size(); }
  std::size_t n_antennas() const { return static_cast<std::size_t>(codewords_.rows()); }

  // N x N matrix whose columns are the codewords.
  const CMatrix& matrix() const { return codewords_; }
  auto codeword(std::size_t index) const { return codewords_.col(static_cast<Eigen::Index>(index)); }
  double angle(std::size_t index) const { return angles_.at(index); }
  const std::vector<double>& angles() const { return angles_; }

 private:
  CMatrix codewords_;
  std::vector<double> angles_;
};

/// Angle of 0-based codeword `index` in an N-entry DFT codebook.
double dft_codebook_angle(std::size_t n_antennas, std::size_t index);

Codebook dft_codebook(std::size_t n_antennas, double spacing_ratio = 0.5);

}  // namespace hbf

#endif  // HBF_CODEBOOK_HPP
