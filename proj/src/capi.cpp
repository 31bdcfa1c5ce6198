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

#include "gcfloer/gcfloer.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "gcfloer/commands.hpp"
#include "gcfloer/error.hpp"
#include "gcfloer/novikov.hpp"

struct gcf_config {
  gcfloer::RunConfig value;
};
struct gcf_report {
  gcfloer::Report value;
};
struct gcf_series {
  gcfloer::NovikovSeries value;
};
struct gcf_polytope {
  gcfloer::HPolytope value;
};

namespace {

thread_local std::string last_error;

static_assert(static_cast<int>(gcfloer::ErrorCode::InvalidArgument) + 1 == GCF_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(gcfloer::ErrorCode::Io) + 1 == GCF_ERR_IO);

template <class F>
gcf_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return GCF_OK;
  } catch (const gcfloer::Error& e) {
    last_error = e.what();
    return static_cast<gcf_status>(static_cast<int>(e.code()) + 1);
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return GCF_ERR_INTERNAL;
}

gcf_status null_argument() {
  last_error = "null argument";
  return GCF_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Make>
gcf_status make_report(gcf_report** out, Make&& make) {
  if (!out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new gcf_report{make()}; });
}

const gcfloer::Table* table_at(const gcf_report* r, size_t t) {
  if (!r || t >= r->value.tables.size()) return nullptr;
  return &r->value.tables[t];
}

}  // namespace

extern "C" {

const char* gcf_version(void) { return "0.1.0"; }

const char* gcf_status_name(gcf_status status) {
  switch (status) {
    case GCF_OK: return "ok";
    case GCF_ERR_INTERNAL: return "internal";
    default: break;
  }
  if (status > GCF_OK && status <= GCF_ERR_IO)
    return gcfloer::error_code_name(static_cast<gcfloer::ErrorCode>(static_cast<int>(status) - 1));
  return "unknown";
}

const char* gcf_last_error(void) { return last_error.c_str(); }

void gcf_string_free(char* s) { std::free(s); }

gcf_status gcf_config_default(gcf_config** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new gcf_config{}; });
}

gcf_status gcf_config_load(const char* path, gcf_config** out) {
  if (!path || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new gcf_config{gcfloer::load_config(path)}; });
}

gcf_status gcf_config_parse(const char* json, gcf_config** out) {
  if (!json || !out) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = new gcf_config{gcfloer::parse_config(json)}; });
}

gcf_status gcf_config_set(gcf_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return null_argument();
  return guarded([&] { gcfloer::set_config_value(config->value, key, value); });
}

gcf_status gcf_config_to_json(const gcf_config* config, char** out) {
  if (!config || !out) return null_argument();
  return guarded([&] { *out = copy_string(gcfloer::config_to_json(config->value)); });
}

int gcf_config_format(const gcf_config* config) {
  return config && config->value.format == gcfloer::OutputFormat::Json ? 1 : 0;
}

const char* gcf_config_out(const gcf_config* config) { return config ? config->value.out.c_str() : ""; }

void gcf_config_free(gcf_config* config) { delete config; }

gcf_status gcf_cmd_validate(const gcf_config* config, gcf_report** out) {
  if (!config) return null_argument();
  return make_report(out, [&] { return gcfloer::cmd_validate(config->value); });
}

gcf_status gcf_cmd_polytope(const gcf_config* config, gcf_report** out) {
  if (!config) return null_argument();
  return make_report(out, [&] { return gcfloer::cmd_polytope(config->value); });
}

gcf_status gcf_cmd_potential(const gcf_config* config, gcf_report** out) {
  if (!config) return null_argument();
  return make_report(out, [&] { return gcfloer::cmd_potential(config->value); });
}

gcf_status gcf_cmd_newton(const gcf_config* config, gcf_report** out) {
  if (!config) return null_argument();
  return make_report(out, [&] { return gcfloer::cmd_newton(config->value); });
}

gcf_status gcf_cmd_crit(const gcf_config* config, const char* lift, gcf_report** out) {
  if (!config) return null_argument();
  return make_report(out, [&] {
    std::optional<gcfloer::Rational> k;
    if (lift) {
      k = gcfloer::parse_rational(lift);
      if (*k <= 0) throw gcfloer::Error(gcfloer::ErrorCode::Parse, "lift order must be positive");
    }
    return gcfloer::cmd_crit(config->value, k);
  });
}

gcf_status gcf_cmd_probes(const gcf_config* config, gcf_report** out) {
  if (!config) return null_argument();
  return make_report(out, [&] { return gcfloer::cmd_probes(config->value); });
}

gcf_status gcf_cmd_clifford(int n, const char* gram, gcf_report** out) {
  return make_report(out, [&] { return gcfloer::cmd_clifford(n, gram ? gram : ""); });
}

gcf_status gcf_cmd_qh(gcf_report** out) {
  return make_report(out, [] { return gcfloer::cmd_qh(); });
}

gcf_status gcf_cmd_verify_all(const gcf_config* config, gcf_report** out) {
  if (!config) return null_argument();
  return make_report(out, [&] { return gcfloer::cmd_verify_all(config->value); });
}

int gcf_report_status(const gcf_report* report) { return report ? report->value.status : 1; }

size_t gcf_report_table_count(const gcf_report* report) { return report ? report->value.tables.size() : 0; }

const char* gcf_report_table_title(const gcf_report* report, size_t table) {
  const auto* t = table_at(report, table);
  return t ? t->title.c_str() : nullptr;
}

size_t gcf_report_column_count(const gcf_report* report, size_t table) {
  const auto* t = table_at(report, table);
  return t ? t->columns.size() : 0;
}

const char* gcf_report_column(const gcf_report* report, size_t table, size_t column) {
  const auto* t = table_at(report, table);
  return t && column < t->columns.size() ? t->columns[column].c_str() : nullptr;
}

size_t gcf_report_row_count(const gcf_report* report, size_t table) {
  const auto* t = table_at(report, table);
  return t ? t->rows.size() : 0;
}

const char* gcf_report_cell(const gcf_report* report, size_t table, size_t row, size_t column) {
  const auto* t = table_at(report, table);
  if (!t || row >= t->rows.size() || column >= t->columns.size()) return nullptr;
  return t->rows[row][column].c_str();
}

gcf_status gcf_report_render(const gcf_report* report, const char* format, char** out) {
  if (!report || !format || !out) return null_argument();
  return guarded([&] {
    const std::string f = format;
    if (f != "csv" && f != "json") throw gcfloer::Error(gcfloer::ErrorCode::Parse, "format must be csv or json");
    *out = copy_string(gcfloer::render(report->value, f == "json" ? gcfloer::OutputFormat::Json
                                                                  : gcfloer::OutputFormat::Csv));
  });
}

const char* gcf_report_svg(const gcf_report* report) {
  return report && !report->value.svg.empty() ? report->value.svg.c_str() : nullptr;
}

void gcf_report_free(gcf_report* report) { delete report; }

gcf_status gcf_series_parse(const char* text, gcf_series** out) {
  if (!text || !out) return null_argument();
  return guarded([&] { *out = new gcf_series{gcfloer::NovikovSeries::parse(text)}; });
}

gcf_status gcf_series_add(const gcf_series* a, const gcf_series* b, gcf_series** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = new gcf_series{a->value + b->value}; });
}

gcf_status gcf_series_mul(const gcf_series* a, const gcf_series* b, gcf_series** out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = new gcf_series{a->value * b->value}; });
}

gcf_status gcf_series_invert(const gcf_series* s, const char* order, gcf_series** out) {
  if (!s || !order || !out) return null_argument();
  return guarded([&] { *out = new gcf_series{gcfloer::invert(s->value, gcfloer::parse_rational(order))}; });
}

gcf_status gcf_series_valuation(const gcf_series* s, char** out) {
  if (!s || !out) return null_argument();
  return guarded([&] {
    const auto v = s->value.valuation();
    *out = copy_string(v ? gcfloer::to_string(*v) : "inf");
  });
}

gcf_status gcf_series_to_string(const gcf_series* s, char** out) {
  if (!s || !out) return null_argument();
  return guarded([&] { *out = copy_string(s->value.to_string()); });
}

void gcf_series_free(gcf_series* s) { delete s; }

gcf_status gcf_polytope_cut(const gcf_config* config, gcf_polytope** out) {
  if (!config || !out) return null_argument();
  return guarded([&] { *out = new gcf_polytope{gcfloer::build_cut_polytope(config->value.params)}; });
}

size_t gcf_polytope_facet_count(const gcf_polytope* p) { return p ? p->value.facet_count() : 0; }

gcf_status gcf_polytope_classify(const gcf_polytope* p, const char* point, int* kind) {
  if (!p || !point || !kind) return null_argument();
  return guarded([&] {
    std::vector<gcfloer::Rational> coords;
    std::stringstream ss(point);
    std::string cell;
    while (std::getline(ss, cell, ',')) coords.push_back(gcfloer::parse_rational(cell));
    const auto c = p->value.classify(gcfloer::QVector(std::move(coords)));
    *kind = c.kind == gcfloer::PointClass::Kind::Interior ? 0 : (c.kind == gcfloer::PointClass::Kind::OnFaces ? 1 : 2);
  });
}

void gcf_polytope_free(gcf_polytope* p) { delete p; }

}  // extern "C"
