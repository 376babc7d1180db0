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

#ifndef HBF_SELFTEST_HPP
#define HBF_SELFTEST_HPP

#include <iosfwd>

namespace hbf {

// Runs the built-in oracle checks (assignment vs. exhaustive search, codebook
// orthonormality, DFT vs. direct summation, ZF nulling and power) and prints
// one PASS/FAIL line per check. Returns true iff all pass.
bool run_selftest(std::ostream& os);

}  // namespace hbf

#endif  // HBF_SELFTEST_HPP
