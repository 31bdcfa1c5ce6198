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

#include "gcfloer/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gcfloer/critsolve.hpp"
#include "gcfloer/error.hpp"

namespace gcfloer {

namespace {

using nlohmann::json;

Rational rational_field(const json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw Error(ErrorCode::Parse, std::string(what) + " must be an integer or a \"p/q\" string");
}

int int_field(const json& v, const char* what) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    int out = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && p == s.data() + s.size()) return out;
  }
  throw Error(ErrorCode::Parse, std::string(what) + " must be an integer");
}

double double_field(const json& v, const char* what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
  throw Error(ErrorCode::Parse, std::string(what) + " must be a number");
}

OutputFormat format_field(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw Error(ErrorCode::Parse, "format must be csv or json");
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::Parse, "config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "n") {
      c.params.n = int_field(v, "n");
    } else if (key == "r") {
      c.params.r = rational_field(v, "r");
    } else if (key == "lambda") {
      if (!v.is_array() || v.size() != 3) throw Error(ErrorCode::Parse, "lambda must be an array of three values");
      c.params.lambda1 = rational_field(v[0], "lambda");
      c.params.lambda2 = rational_field(v[1], "lambda");
      c.params.lambda3 = rational_field(v[2], "lambda");
    } else if (key == "truncation") {
      c.truncation = rational_field(v, "truncation");
    } else if (key == "grid") {
      c.grid = int_field(v, "grid");
    } else if (key == "t") {
      c.t = double_field(v, "t");
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) throw Error(ErrorCode::Parse, "seed must be a non-negative integer");
      c.seed = v.get<std::uint64_t>();
    } else if (key == "oracle_seeds") {
      c.oracle_seeds = int_field(v, "oracle_seeds");
    } else if (key == "format") {
      if (!v.is_string()) throw Error(ErrorCode::Parse, "format must be a string");
      c.format = format_field(v.get<std::string>());
    } else if (key == "out") {
      if (!v.is_string()) throw Error(ErrorCode::Parse, "out must be a string");
      c.out = v.get<std::string>();
    } else {
      throw Error(ErrorCode::Parse, "unknown config key '" + key + "'");
    }
  }
  check_config(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void set_config_value(RunConfig& config, std::string_view key, std::string_view value) {
  static const char* const kKeys[] = {"n", "r", "truncation", "grid", "t", "seed", "oracle_seeds", "format", "out"};
  if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
    throw Error(ErrorCode::Parse, "unknown config key '" + std::string(key) + "'");
  json j = json::parse(config_to_json(config));
  if (key == "seed") {
    std::uint64_t s = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
    if (ec != std::errc() || p != value.data() + value.size())
      throw Error(ErrorCode::Parse, "seed must be a non-negative integer");
    j["seed"] = s;
  } else {
    j[std::string(key)] = std::string(value);
  }
  config = parse_config(j.dump());
}

void check_config(const RunConfig& c) {
  if (c.grid < 2) throw Error(ErrorCode::Parse, "grid must be at least 2");
  if (!(c.t > 0 && c.t < 0.1)) throw Error(ErrorCode::Parse, "t must lie in (0, 0.1)");
  if (c.truncation && *c.truncation <= 0) throw Error(ErrorCode::Parse, "truncation must be positive");
  if (c.oracle_seeds < 0) throw Error(ErrorCode::Parse, "oracle_seeds must be non-negative");
}

Rational lift_order(const RunConfig& config) {
  return config.truncation ? *config.truncation : default_lift_order(config.params);
}

std::string config_to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["n"] = c.params.n;
  j["r"] = to_string(c.params.r);
  j["lambda"] = {to_string(c.params.lambda1), to_string(c.params.lambda2), to_string(c.params.lambda3)};
  if (c.truncation) j["truncation"] = to_string(*c.truncation);
  j["grid"] = c.grid;
  j["t"] = c.t;
  j["seed"] = c.seed;
  j["oracle_seeds"] = c.oracle_seeds;
  j["format"] = c.format == OutputFormat::Csv ? "csv" : "json";
  if (!c.out.empty()) j["out"] = c.out;
  return j.dump(2);
}

}  // namespace gcfloer
