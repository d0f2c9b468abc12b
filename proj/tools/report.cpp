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

#include "report.hpp"

#include <cstdlib>
#include <fmt/format.h>
#include <json.hpp>

#include "boxwell/barton.hpp"
#include "boxwell/errors.hpp"

namespace boxwell::cli {

namespace {

Cell number(double value) { return {Cell::Kind::number, format_number(value)}; }
Cell integer(int value) { return {Cell::Kind::integer, std::to_string(value)}; }
Cell text(std::string_view value) { return {Cell::Kind::text, std::string(value)}; }
Cell null() { return {Cell::Kind::null, ""}; }

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i ? "," : "") + csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i ? "," : "") + csv_field(row[i].text);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& cell = row[i];
      switch (cell.kind) {
        case Cell::Kind::number: object[table.columns[i]] = std::strtod(cell.text.c_str(), nullptr); break;
        case Cell::Kind::integer: object[table.columns[i]] = std::stoll(cell.text); break;
        case Cell::Kind::text: object[table.columns[i]] = cell.text; break;
        case Cell::Kind::null: object[table.columns[i]] = nullptr; break;
      }
    }
    array.push_back(std::move(object));
  }
  return array.dump(2) + '\n';
}

std::string render_markdown(const Table& table) {
  std::string out = "|";
  std::string rule = "|";
  for (const auto& column : table.columns) {
    out += ' ' + column + " |";
    rule += "---|";
  }
  out += '\n' + rule + '\n';
  for (const auto& row : table.rows) {
    out += '|';
    for (const Cell& cell : row) out += ' ' + (cell.kind == Cell::Kind::null ? std::string("-") : cell.text) + " |";
    out += '\n';
  }
  if (!table.footer.empty()) {
    out += '\n';
    for (const auto& line : table.footer) out += line + '\n';
  }
  return out;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{:.5e}", value); }

ReportRow make_report_row(const Level& level, const Confinement& box, const SeriesConfig& cfg) {
  const EffectiveIndex index = level_nu(level, box, cfg);
  ReportRow row;
  row.k = box.k();
  row.n = level.n();
  row.parity = level.parity();
  row.nu = index.nu;
  row.shift_exact = index.delta;
  row.shift_barton_asym = barton_asym(level, box).value;
  if (level.n() == 0) {
    row.shift_barton_integral = barton_ground_integral(box).value;
  } else {
    try {
      row.shift_barton_integral = barton_excited_integral(level, box, default_a_cutoff(level, box)).value;
    } catch (const DomainError&) {
      row.shift_barton_integral.reset();
    }
  }
  row.ratio = row.shift_exact / row.shift_barton_asym;
  row.method = index.method;
  row.residual = index.residual;
  return row;
}

Table report_table(std::span<const ReportRow> rows) {
  Table table;
  table.columns = {"k",     "n",      "parity", "nu", "shift_exact", "shift_barton_asym", "shift_barton_integral",
                   "ratio", "method", "residual"};
  for (const ReportRow& r : rows) {
    table.rows.push_back({number(r.k), integer(r.n), text(to_string(r.parity)), number(r.nu), number(r.shift_exact),
                          number(r.shift_barton_asym),
                          r.shift_barton_integral ? number(*r.shift_barton_integral) : null(), number(r.ratio),
                          text(to_string(r.method)), number(r.residual)});
  }
  return table;
}

Table spectrum_table(std::span<const SpectrumRow> rows, std::span<const double> energy_fd) {
  if (!energy_fd.empty() && energy_fd.size() != rows.size()) {
    throw DomainError("spectrum_table: one FD energy per row required");
  }
  Table table;
  table.columns = {"k", "n", "parity", "nu", "delta", "energy_confined", "energy_free", "shift"};
  if (!energy_fd.empty()) {
    table.columns.emplace_back("energy_fd");
    table.columns.emplace_back("shift_fd");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SpectrumRow& r = rows[i];
    std::vector<Cell> cells{number(r.k),     integer(r.n),     text(to_string(r.parity)),
                            number(r.nu),    number(r.delta),  number(r.energy_confined),
                            number(r.energy_free), number(r.shift)};
    if (!energy_fd.empty()) {
      cells.push_back(number(energy_fd[i]));
      cells.push_back(number(energy_fd[i] - r.energy_free));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::string render(const Table& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return render_csv(table);
    case OutputFormat::json: return render_json(table);
    case OutputFormat::markdown: return render_markdown(table);
  }
  return {};
}

}  // namespace boxwell::cli
