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

#ifndef HBF_HUNGARIAN_HPP
#define HBF_HUNGARIAN_HPP

#include <cstddef>
#include <vector>

#include "hbf/types.hpp"

namespace hbf {

/// Exact minimum-cost assignment on a square matrix (Kuhn-Munkres).
///
/// Follows the classic reduction/cover procedure: row and column reductions,
/// then repeated minimum line covers of the zero entries, adjusting the
/// uncovered entries by their minimum until n independent zeros exist.
/// Zeros are scanned row-major (lowest row, then lowest column) so the
/// result is reproducible when several optimal assignments exist.
///
/// Returns `perm` with perm[row] = column. Throws DimensionError for a
/// non-square matrix and std::invalid_argument for non-finite entries.
std::vector<std::size_t> hungarian_solve(const RMatrix& cost);

// sum_i cost(i, perm[i]), accumulated in row order.
double assignment_cost(const RMatrix& cost, const std::vector<std::size_t>& perm);

}  // namespace hbf

#endif  // HBF_HUNGARIAN_HPP
