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

#ifndef HBF_BASELINES_HPP
#define HBF_BASELINES_HPP

#include <string>
#include <vector>

#include "hbf/channel.hpp"
#include "hbf/codebook.hpp"
#include "hbf/selection.hpp"
#include "hbf/types.hpp"

namespace hbf {

enum class SchemeId { kProposed, kGreedyConflictAgnostic, kFullyDigital };

// "proposed", "greedy", "fully_digital"
std::string to_string(SchemeId id);
SchemeId parse_scheme(const std::string& s);

/// Each user takes the codeword with the largest entry in its row of the
/// (unthresholded) IF-rate table; ties go to the lowest index. Several users
/// may end up on the same codeword.
AnalogPrecoder greedy_select(const RMatrix& table, const Codebook& codebook);

/// Per-subcarrier N x U ZF or MMSE precoder on the full channel H[k], with
/// unit-norm columns (||F[k]||_F^2 = U).
std::vector<CMatrix> fully_digital(const FreqChannel& channel, const SystemParams& params,
                                   Criterion criterion);

}  // namespace hbf

#endif  // HBF_BASELINES_HPP
