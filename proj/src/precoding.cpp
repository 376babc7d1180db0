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

#include "hbf/precoding.hpp"

#include <stdexcept>

namespace hbf {

std::vector<CMatrix> HybridPrecoder::composite() const {
  std::vector<CMatrix> out;
  out.reserve(digital.size());
  for (const CMatrix& d : digital) out.push_back(analog.matrix * d);
  return out;
}

std::vector<CMatrix> equivalent_channel(const FreqChannel& channel, const AnalogPrecoder& analog) {
  if (channel.n_antennas() != static_cast<std::size_t>(analog.matrix.rows()))
    throw DimensionError("equivalent_channel: channel has " + std::to_string(channel.n_antennas()) +
                         " antennas, analog precoder has " + std::to_string(analog.matrix.rows()) + " rows");
  std::vector<CMatrix> out;
  out.reserve(channel.n_subcarriers());
  for (const CMatrix& h : channel.per_subcarrier) out.push_back(h * analog.matrix);
  return out;
}

DigitalResult zf_inverse(const CMatrix& h) {
  if (h.rows() > h.cols())
    throw DimensionError("zf_inverse: more users than transmit dimensions");
  Eigen::JacobiSVD<CMatrix> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RVector& s = svd.singularValues();
  const double s_max = s.size() > 0 ? s(0) : 0.0;
  DigitalResult out;
  RVector inv_s(s.size());
  if (s.size() > 0 && s(s.size() - 1) < 1e-10 * s_max) {
    out.regularized = true;
    const double eps = 1e-12 * s_max * s_max;
    inv_s = s.array() / (s.array().square() + eps);
  } else {
    inv_s = s.cwiseInverse();
  }
  out.matrix = svd.matrixV() * inv_s.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
  return out;
}

CMatrix mmse_inverse(const CMatrix& h, const SystemParams& params) {
  const CMatrix gram = params.stream_power() * (h * h.adjoint()) +
                       params.noise_var * CMatrix::Identity(h.rows(), h.rows());
  // gram is Hermitian, so (H^H G^-1)^H = G^-1 H.
  return gram.llt().solve(h).adjoint();
}

DigitalResult zf_digital(const CMatrix& equiv, const SystemParams& /*params*/) {
  if (equiv.rows() != equiv.cols()) throw DimensionError("zf_digital: equivalent channel must be square");
  return zf_inverse(equiv);
}

CMatrix mmse_digital(const CMatrix& equiv, const SystemParams& params) {
  if (equiv.rows() != equiv.cols()) throw DimensionError("mmse_digital: equivalent channel must be square");
  return mmse_inverse(equiv, params);
}

CMatrix normalize_columns(const CMatrix& analog, const CMatrix& digital_raw) {
  if (analog.cols() != digital_raw.rows())
    throw DimensionError("normalize_columns: analog columns do not match digital rows");
  const CMatrix composite = analog * digital_raw;
  CMatrix out = digital_raw;
  for (Eigen::Index u = 0; u < out.cols(); ++u) {
    const double norm = composite.col(u).norm();
    if (!(norm >= 1e-300))
      throw std::domain_error("normalize_columns: user " + std::to_string(u + 1) +
                              " has a zero composite precoding column");
    out.col(u) /= norm;
  }
  return out;
}

CMatrix normalize_columns(const CMatrix& precoder) {
  CMatrix out = precoder;
  for (Eigen::Index u = 0; u < out.cols(); ++u) {
    const double norm = out.col(u).norm();
    if (!(norm >= 1e-300))
      throw std::domain_error("normalize_columns: user " + std::to_string(u + 1) +
                              " has a zero precoding column");
    out.col(u) /= norm;
  }
  return out;
}

HybridPrecoder design_hybrid(const FreqChannel& channel, const AnalogPrecoder& analog,
                             const SystemParams& params, Criterion criterion) {
  HybridPrecoder out;
  out.analog = analog;
  const std::vector<CMatrix> equiv = equivalent_channel(channel, analog);
  out.digital.reserve(equiv.size());
  for (const CMatrix& he : equiv) {
    CMatrix raw;
    if (criterion == Criterion::kZf) {
      DigitalResult zf = zf_digital(he, params);
      out.degenerate = out.degenerate || zf.regularized;
      raw = std::move(zf.matrix);
    } else {
      raw = mmse_digital(he, params);
    }
    out.digital.push_back(normalize_columns(analog.matrix, raw));
  }
  return out;
}

}  // namespace hbf
