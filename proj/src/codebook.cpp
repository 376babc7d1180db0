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

#include "hbf/codebook.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hbf {

CVector steering_vector(std::size_t n_antennas, double theta, double spacing_ratio) {
  if (n_antennas == 0) throw std::invalid_argument("steering_vector: n_antennas must be >= 1");
  if (!std::isfinite(theta)) throw std::invalid_argument("steering_vector: theta must be finite");
  if (!(spacing_ratio > 0.0) || !std::isfinite(spacing_ratio))
    throw std::invalid_argument("steering_vector: spacing_ratio must be finite and > 0");

  const double amplitude = 1.0 / std::sqrt(static_cast<double>(n_antennas));
  const double step = 2.0 * kPi * spacing_ratio * std::sin(theta);
  CVector a(static_cast<Eigen::Index>(n_antennas));
  for (std::size_t q = 0; q < n_antennas; ++q) {
    a(static_cast<Eigen::Index>(q)) = std::polar(amplitude, step * static_cast<double>(q));
  }
  return a;
}

Codebook::Codebook(CMatrix codewords, std::vector<double> angles)
    : codewords_(std::move(codewords)), angles_(std::move(angles)) {
  if (static_cast<std::size_t>(codewords_.cols()) != angles_.size())
    throw DimensionError("Codebook: one angle per codeword required");
}

double dft_codebook_angle(std::size_t n_antennas, std::size_t index) {
  const double n = static_cast<double>(index + 1);
  return std::asin(-1.0 + (2.0 * n - 1.0) / static_cast<double>(n_antennas));
}

Codebook dft_codebook(std::size_t n_antennas, double spacing_ratio) {
  if (n_antennas == 0) throw std::invalid_argument("dft_codebook: n_antennas must be >= 1");
  const auto n = static_cast<Eigen::Index>(n_antennas);
  CMatrix words(n, n);
  std::vector<double> angles(n_antennas);
  for (std::size_t i = 0; i < n_antennas; ++i) {
    angles[i] = dft_codebook_angle(n_antennas, i);
    words.col(static_cast<Eigen::Index>(i)) = steering_vector(n_antennas, angles[i], spacing_ratio);
  }
  return Codebook(std::move(words), std::move(angles));
}

}  // namespace hbf
