// Copyright 2026 The Boxwell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boxwell/eigensolve.hpp"

namespace boxwell::cli {

enum class OutputFormat { csv, json, markdown };

/// One comparison row: exact shift against both Barton estimates.
struct ReportRow {
  double k = 0.0;
  int n = 0;
  Parity parity = Parity::even;
  double nu = 0.0;
  double shift_exact = 0.0;
  double shift_barton_asym = 0.0;
  std::optional<double> shift_barton_integral;  // absent when no valid cutoff exists
  double ratio = 0.0;
  RootMethod method = RootMethod::brent;
  double residual = 0.0;
};

ReportRow make_report_row(const Level& level, const Confinement& box, const SeriesConfig& cfg = {});

/// Six significant digits, e.g. 3.91083e-04.
std::string format_number(double value);

struct Cell {
  enum class Kind { number, integer, text, null };
  Kind kind = Kind::null;
  std::string text;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Printed under a markdown table only.
  std::vector<std::string> footer;
};

Table report_table(std::span<const ReportRow> rows);

/// energy_fd may be empty; otherwise it holds one FD energy per row.
Table spectrum_table(std::span<const SpectrumRow> rows, std::span<const double> energy_fd);

/// csv and json numbers come from the same formatted text, so both carry
/// identical values.
std::string render(const Table& table, OutputFormat format);

}  // namespace boxwell::cli
