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

#include "hbf/baselines.hpp"

#include <stdexcept>

#include "hbf/precoding.hpp"

namespace hbf {

std::string to_string(SchemeId id) {
  switch (id) {
    case SchemeId::kProposed:
      return "proposed";
    case SchemeId::kGreedyConflictAgnostic:
      return "greedy";
    case SchemeId::kFullyDigital:
      return "fully_digital";
  }
  return "unknown";
}

SchemeId parse_scheme(const std::string& s) {
  if (s == "proposed") return SchemeId::kProposed;
  if (s == "greedy") return SchemeId::kGreedyConflictAgnostic;
  if (s == "fully_digital" || s == "digital") return SchemeId::kFullyDigital;
  throw std::invalid_argument("unknown scheme '" + s + "' (expected proposed, greedy or fully_digital)");
}

AnalogPrecoder greedy_select(const RMatrix& table, const Codebook& codebook) {
  if (static_cast<std::size_t>(table.cols()) != codebook.size())
    throw DimensionError("greedy_select: table width does not match codebook size");
  std::vector<std::size_t> indices(static_cast<std::size_t>(table.rows()));
  for (Eigen::Index u = 0; u < table.rows(); ++u) {
    Eigen::Index best = 0;
    for (Eigen::Index n = 1; n < table.cols(); ++n) {
      if (table(u, n) > table(u, best)) best = n;
    }
    indices[static_cast<std::size_t>(u)] = static_cast<std::size_t>(best);
  }
  return make_analog_precoder(codebook, indices);
}

std::vector<CMatrix> fully_digital(const FreqChannel& channel, const SystemParams& params,
                                   Criterion criterion) {
  std::vector<CMatrix> out;
  out.reserve(channel.n_subcarriers());
  for (const CMatrix& h : channel.per_subcarrier) {
    CMatrix raw = criterion == Criterion::kZf ? zf_inverse(h).matrix : mmse_inverse(h, params);
    out.push_back(normalize_columns(raw));
  }
  return out;
}

}  // namespace hbf
