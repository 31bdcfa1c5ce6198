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

#pragma once

#include <string>
#include <vector>

#include "gcfloer/config.hpp"

namespace gcfloer {

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
};

struct Report {
  std::vector<Table> tables;
  /// 0 when every check passed, 1 on a mathematical check failure.
  int status = 0;
  /// Optional SVG document produced alongside the tables.
  std::string svg;
};

/// Tables separated by blank lines, each as "# title", header, rows.
std::string render_csv(const Report& report);
/// {"status": s, "tables": [{"title", "columns", "rows": [{column: cell}]}]}.
std::string render_json(const Report& report);
std::string render(const Report& report, OutputFormat format);

}  // namespace gcfloer
