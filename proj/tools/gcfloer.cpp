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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gcfloer/gcfloer.h"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::string format;
  std::string lift;
  std::optional<int> grid;
  std::string t;
  std::optional<unsigned long long> seed;
  std::string svg;
  int n = 3;
  std::string gram;
};

// Exit 2 for usage and input problems, 1 for mathematical failures.
int exit_for(gcf_status s) {
  switch (s) {
    case GCF_OK: return 0;
    case GCF_ERR_PARSE:
    case GCF_ERR_IO:
    case GCF_ERR_INVALID_ARGUMENT:
    case GCF_ERR_DIMENSION_MISMATCH: return 2;
    default: return 1;
  }
}

int fail(gcf_status s) {
  std::cerr << "gcfloer: " << gcf_status_name(s) << ": " << gcf_last_error() << "\n";
  return exit_for(s);
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

int run(const std::string& command, const Options& o) {
  gcf_config* cfg = nullptr;
  gcf_status s = o.config.empty() ? gcf_config_default(&cfg) : gcf_config_load(o.config.c_str(), &cfg);
  if (s != GCF_OK) return fail(s);
  auto set = [&](const char* key, const std::string& value) {
    if (s == GCF_OK && !value.empty()) s = gcf_config_set(cfg, key, value.c_str());
  };
  set("format", o.format);
  set("out", o.out);
  set("t", o.t);
  if (o.grid) set("grid", std::to_string(*o.grid));
  if (o.seed) set("seed", std::to_string(*o.seed));
  if (command == "verify-all") set("truncation", o.lift);
  if (s != GCF_OK) {
    gcf_config_free(cfg);
    return fail(s);
  }
  const bool json = gcf_config_format(cfg) == 1;
  const std::string out_path = gcf_config_out(cfg);

  gcf_report* report = nullptr;
  if (command == "validate") s = gcf_cmd_validate(cfg, &report);
  else if (command == "polytope") s = gcf_cmd_polytope(cfg, &report);
  else if (command == "potential") s = gcf_cmd_potential(cfg, &report);
  else if (command == "newton") s = gcf_cmd_newton(cfg, &report);
  else if (command == "crit") s = gcf_cmd_crit(cfg, o.lift.empty() ? nullptr : o.lift.c_str(), &report);
  else if (command == "probes") s = gcf_cmd_probes(cfg, &report);
  else if (command == "clifford") s = gcf_cmd_clifford(o.n, o.gram.c_str(), &report);
  else if (command == "qh") s = gcf_cmd_qh(&report);
  else if (command == "verify-all") s = gcf_cmd_verify_all(cfg, &report);
  gcf_config_free(cfg);
  if (s != GCF_OK) return fail(s);

  char* text = nullptr;
  s = gcf_report_render(report, json ? "json" : "csv", &text);
  if (s != GCF_OK) {
    gcf_report_free(report);
    return fail(s);
  }
  int code = gcf_report_status(report);
  if (out_path.empty()) {
    std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
  } else if (!write_file(out_path, text)) {
    std::cerr << "gcfloer: cannot write " << out_path << "\n";
    code = 2;
  }
  gcf_string_free(text);
  if (!o.svg.empty()) {
    const char* svg = gcf_report_svg(report);
    if (!svg) {
      std::cerr << "gcfloer: this command produces no SVG\n";
      code = 2;
    } else if (!write_file(o.svg, svg)) {
      std::cerr << "gcfloer: cannot write " << o.svg << "\n";
      code = 2;
    }
  }
  gcf_report_free(report);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical points, probes and Clifford checks for multiplicity-free U(2)-manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gcf_version());
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  const std::pair<const char*, const char*> commands[] = {
      {"validate", "Check the parameter constraints"},
      {"polytope", "Facets and vertices of the cut polytope"},
      {"potential", "Leading order potential and its log derivatives"},
      {"newton", "Newton polygon of the eliminated polynomial"},
      {"crit", "Valuation cases and the six critical points"},
      {"probes", "Probe sweep over the rational grid"},
      {"clifford", "Commutator span, HH0 and top class square of a Clifford algebra"},
      {"qh", "Ranks of the quantum cohomology presentation"},
      {"verify-all", "Run every stage and print a pass/fail ledger"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    const std::string n = name;
    if (n == "crit" || n == "verify-all") {
      sub->add_option("--lift", o.lift, "Certify lifted series to this order (p/q)");
    }
    if (n == "probes" || n == "verify-all") {
      sub->add_option("--grid", o.grid, "Grid denominator D")->check(CLI::Range(2, 1000));
    }
    if (n == "verify-all") {
      sub->add_option("--t", o.t, "Oracle value of T");
      sub->add_option("--seed", o.seed, "Oracle seed");
    }
    if (n == "probes") sub->add_option("--svg", o.svg, "Write a fixed-u3 slice as SVG");
    if (n == "clifford") {
      sub->add_option("--n", o.n, "Number of odd generators")->check(CLI::Range(0, 8));
      sub->add_option("--gram", o.gram, "Rows separated by ';', entries by ','; one row is a diagonal");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (const auto* sub : app.get_subcommands()) return run(sub->get_name(), o);
  return 2;
}
