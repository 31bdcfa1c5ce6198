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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gcfloer/polytope.hpp"

namespace gcfloer {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  WoodwardParams params{3, 5, 10, 0, -1};
  /// Lift order; defaults to S1 + 3(l2 - l3) when unset.
  std::optional<Rational> truncation;
  int grid = 8;
  double t = 0.01;
  std::uint64_t seed = 1;
  int oracle_seeds = 200;
  OutputFormat format = OutputFormat::Csv;
  std::string out;
};

/// JSON object; rationals may be "p/q" strings or integers.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::string& path);

/// Overrides one field by name ("grid", "t", "seed", "truncation", "format", "out", ...).
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);

/// Checks the invariants D >= 2, 0 < t < 0.1, K > 0.
void check_config(const RunConfig& config);

Rational lift_order(const RunConfig& config);

std::string config_to_json(const RunConfig& config);

}  // namespace gcfloer
