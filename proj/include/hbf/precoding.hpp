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

#ifndef HBF_PRECODING_HPP
#define HBF_PRECODING_HPP

#include <cstddef>
#include <vector>

#include "hbf/channel.hpp"
#include "hbf/selection.hpp"
#include "hbf/types.hpp"

namespace hbf {

// Analog precoder shared by all subcarriers plus one U x U digital precoder
// per subcarrier, with every composite column F_RF f_BB^u[k] of unit norm.
struct HybridPrecoder {
  AnalogPrecoder analog;
  std::vector<CMatrix> digital;
  bool degenerate = false;  // a ZF inverse needed regularization on some subcarrier

  // F_RF F_BB[k] for every k.
  std::vector<CMatrix> composite() const;
};

// H_e[k] = H[k] F_RF, one U x U matrix per subcarrier.
std::vector<CMatrix> equivalent_channel(const FreqChannel& channel, const AnalogPrecoder& analog);

struct DigitalResult {
  CMatrix matrix;
  bool regularized = false;
};

/// Right pseudo-inverse H^H (H H^H)^-1 evaluated through an SVD. When the
/// smallest singular value is below 1e-10 of the largest, returns the
/// Tikhonov-regularized H^H (H H^H + eps I)^-1 with eps = 1e-12 s_max^2 and
/// sets `regularized`.
DigitalResult zf_inverse(const CMatrix& h);

/// H^H [(rho/KU) H H^H + sigma^2 I]^-1.
CMatrix mmse_inverse(const CMatrix& h, const SystemParams& params);

DigitalResult zf_digital(const CMatrix& equiv, const SystemParams& params);
CMatrix mmse_digital(const CMatrix& equiv, const SystemParams& params);

/// Scales column u of `digital_raw` so that ||F_RF f_BB^u|| = 1. Throws
/// std::domain_error if a composite column has norm below 1e-300.
CMatrix normalize_columns(const CMatrix& analog, const CMatrix& digital_raw);

/// Unit-norm columns for a precoder applied directly at the antennas.
CMatrix normalize_columns(const CMatrix& precoder);

HybridPrecoder design_hybrid(const FreqChannel& channel, const AnalogPrecoder& analog,
                             const SystemParams& params, Criterion criterion);

}  // namespace hbf

#endif  // HBF_PRECODING_HPP
