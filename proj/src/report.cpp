/*
 * Copyright 2026 The gcfloer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gcfloer/report.hpp"

#include <sstream>

#include <json.hpp>

#include "gcfloer/error.hpp"

namespace gcfloer {

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw Error(ErrorCode::DimensionMismatch, "row width differs from header");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
  os << "\r\n";
}

}  // namespace

std::string render_csv(const Report& report) {
  std::ostringstream os;
  for (std::size_t t = 0; t < report.tables.size(); ++t) {
    const Table& table = report.tables[t];
    if (t) os << "\r\n";
    os << "# " << table.title << "\r\n";
    csv_line(os, table.columns);
    for (const auto& row : table.rows) csv_line(os, row);
  }
  return os.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json j;
  j["status"] = report.status;
  j["tables"] = nlohmann::ordered_json::array();
  for (const auto& table : report.tables) {
    nlohmann::ordered_json t;
    t["title"] = table.title;
    t["columns"] = table.columns;
    t["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json r;
      for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = row[i];
      t["rows"].push_back(std::move(r));
    }
    j["tables"].push_back(std::move(t));
  }
  return j.dump(2) + "\n";
}

std::string render(const Report& report, OutputFormat format) {
  return format == OutputFormat::Json ? render_json(report) : render_csv(report);
}

}  // namespace gcfloer
