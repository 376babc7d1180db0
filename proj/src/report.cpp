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

#include "hbf/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hbf {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown output format '" + s + "' (expected csv or json)");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_csv(std::ostream& os, const ResultTable& table) {
  os << "scheme,axis_name,axis_value,mean_sum_rate,stderr,mean_per_user_rate,"
        "median_design_time_s,n_trials,n_failures,seed\n";
  for (const ResultRow& r : table.rows) {
    os << to_string(r.scheme) << ',' << r.axis_name << ',' << format_number(r.axis_value) << ','
       << format_number(r.mean_sum_rate) << ',' << format_number(r.stderr_sum_rate) << ','
       << format_number(r.mean_per_user_rate) << ',' << format_number(r.median_design_time_s) << ','
       << r.n_trials << ',' << r.n_failures << ',' << r.seed << '\n';
  }
}

namespace {

ordered_json real_to_json(double v) { return std::isnan(v) ? ordered_json(nullptr) : ordered_json(v); }

double real_from_json(const ordered_json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

std::string hex64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

void write_json(std::ostream& os, const ResultTable& table) {
  ordered_json j;
  j["version"] = table.version;
  j["config_hash"] = hex64(table.config_hash);
  j["seed"] = table.seed;
  ordered_json config = ordered_json::object();
  std::istringstream lines(table.config);
  std::string line;
  while (std::getline(lines, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) config[line.substr(0, eq)] = line.substr(eq + 1);
  }
  j["config"] = std::move(config);
  ordered_json rows = ordered_json::array();
  for (const ResultRow& r : table.rows) {
    ordered_json row;
    row["scheme"] = to_string(r.scheme);
    row["axis_name"] = r.axis_name;
    row["axis_value"] = real_to_json(r.axis_value);
    row["mean_sum_rate"] = real_to_json(r.mean_sum_rate);
    row["stderr"] = real_to_json(r.stderr_sum_rate);
    row["mean_per_user_rate"] = real_to_json(r.mean_per_user_rate);
    row["median_design_time_s"] = real_to_json(r.median_design_time_s);
    row["n_trials"] = r.n_trials;
    row["n_failures"] = r.n_failures;
    row["seed"] = r.seed;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << '\n';
}

ResultTable parse_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  ResultTable table;
  table.version = j.at("version").get<std::string>();
  table.config_hash = std::stoull(j.at("config_hash").get<std::string>(), nullptr, 16);
  table.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [key, value] : j.at("config").items()) {
    table.config += key + "=" + value.get<std::string>() + "\n";
  }
  for (const ordered_json& row : j.at("rows")) {
    ResultRow r;
    r.scheme = parse_scheme(row.at("scheme").get<std::string>());
    r.axis_name = row.at("axis_name").get<std::string>();
    r.axis_value = real_from_json(row.at("axis_value"));
    r.mean_sum_rate = real_from_json(row.at("mean_sum_rate"));
    r.stderr_sum_rate = real_from_json(row.at("stderr"));
    r.mean_per_user_rate = real_from_json(row.at("mean_per_user_rate"));
    r.median_design_time_s = real_from_json(row.at("median_design_time_s"));
    r.n_trials = row.at("n_trials").get<std::size_t>();
    r.n_failures = row.at("n_failures").get<std::size_t>();
    r.seed = row.at("seed").get<std::uint64_t>();
    table.rows.push_back(std::move(r));
  }
  return table;
}

void emit_results(const ResultTable& table, OutputFormat format, const std::string& destination) {
  auto write = [&](std::ostream& os) {
    if (format == OutputFormat::kCsv) {
      write_csv(os, table);
    } else {
      write_json(os, table);
    }
  };
  if (destination.empty() || destination == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + destination + "' for writing");
  write(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + destination + "'");
}

void write_matrix_text(std::ostream& os, const RMatrix& m) {
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
      os << (c ? " " : "") << buf;
    }
    os << '\n';
  }
}

void write_matrix_text(std::ostream& os, const Eigen::MatrixXi& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
}

}  // namespace hbf
