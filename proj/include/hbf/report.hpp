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

#ifndef HBF_REPORT_HPP
#define HBF_REPORT_HPP

#include <iosfwd>
#include <string>

#include "hbf/experiment.hpp"
#include "hbf/types.hpp"

namespace hbf {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_format(const std::string& s);

// %.9g; NaN is written as "nan".
std::string format_number(double value);

/// CSV with header
///   scheme,axis_name,axis_value,mean_sum_rate,stderr,mean_per_user_rate,
///   median_design_time_s,n_trials,n_failures,seed
/// and one row per (scheme, axis value) in table order.
void write_csv(std::ostream& os, const ResultTable& table);

/// JSON object: version, config_hash (16 hex digits), seed, config (ordered
/// key/value strings of the producing configuration) and rows. Reals are
/// written at full precision so parse_json reproduces the table exactly.
void write_json(std::ostream& os, const ResultTable& table);
ResultTable parse_json(const std::string& text);

/// Writes the table to `destination` ("-" for stdout). Throws
/// std::runtime_error when the destination cannot be written.
void emit_results(const ResultTable& table, OutputFormat format, const std::string& destination);

// Whitespace-separated text table, one matrix row per line (%.17g).
void write_matrix_text(std::ostream& os, const RMatrix& m);
void write_matrix_text(std::ostream& os, const Eigen::MatrixXi& m);

}  // namespace hbf

#endif  // HBF_REPORT_HPP
