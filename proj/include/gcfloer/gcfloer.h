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

#ifndef GCFLOER_GCFLOER_H
#define GCFLOER_GCFLOER_H

#include <stddef.h>

#if defined(GCF_BUILDING_LIBRARY)
#define GCF_API __attribute__((visibility("default")))
#else
#define GCF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcf_status {
  GCF_OK = 0,
  GCF_ERR_INVALID_ARGUMENT = 1,
  GCF_ERR_PARSE = 2,
  GCF_ERR_DEGENERATE_PARAMETERS = 3,
  GCF_ERR_DIMENSION_MISMATCH = 4,
  GCF_ERR_ZERO_SERIES = 5,
  GCF_ERR_NOT_UNITARY = 6,
  GCF_ERR_ZERO_COORDINATE = 7,
  GCF_ERR_TOO_FEW_TERMS = 8,
  GCF_ERR_DIRECTION_NOT_INWARD = 9,
  GCF_ERR_DEGENERATE_HESSIAN = 10,
  GCF_ERR_HESSIAN_SINGULAR = 11,
  GCF_ERR_NO_CONVERGENCE = 12,
  GCF_ERR_DEGENERATE_FORM = 13,
  GCF_ERR_IO = 14,
  GCF_ERR_INTERNAL = 15
} gcf_status;

typedef struct gcf_config gcf_config;
typedef struct gcf_report gcf_report;
typedef struct gcf_series gcf_series;
typedef struct gcf_polytope gcf_polytope;

GCF_API const char* gcf_version(void);
GCF_API const char* gcf_status_name(gcf_status status);
/* Message of the last failed call on this thread; empty if none. */
GCF_API const char* gcf_last_error(void);
/* Strings returned through char** out-parameters. */
GCF_API void gcf_string_free(char* s);

/* Configuration. The default is the n=3, r=5, lambda=(10,0,-1) parameter set. */
GCF_API gcf_status gcf_config_default(gcf_config** out);
GCF_API gcf_status gcf_config_load(const char* path, gcf_config** out);
GCF_API gcf_status gcf_config_parse(const char* json, gcf_config** out);
GCF_API gcf_status gcf_config_set(gcf_config* config, const char* key, const char* value);
GCF_API gcf_status gcf_config_to_json(const gcf_config* config, char** out);
/* 0 for csv, 1 for json. */
GCF_API int gcf_config_format(const gcf_config* config);
/* Output path, empty for stdout. */
GCF_API const char* gcf_config_out(const gcf_config* config);
GCF_API void gcf_config_free(gcf_config* config);

/* Commands. Each produces a report of tables. */
GCF_API gcf_status gcf_cmd_validate(const gcf_config* config, gcf_report** out);
GCF_API gcf_status gcf_cmd_polytope(const gcf_config* config, gcf_report** out);
GCF_API gcf_status gcf_cmd_potential(const gcf_config* config, gcf_report** out);
GCF_API gcf_status gcf_cmd_newton(const gcf_config* config, gcf_report** out);
/* lift may be NULL; otherwise a rational such as "7/2". */
GCF_API gcf_status gcf_cmd_crit(const gcf_config* config, const char* lift, gcf_report** out);
GCF_API gcf_status gcf_cmd_probes(const gcf_config* config, gcf_report** out);
/* gram: rows separated by ';', entries by ','; one row is a diagonal; NULL or "" is the identity. */
GCF_API gcf_status gcf_cmd_clifford(int n, const char* gram, gcf_report** out);
GCF_API gcf_status gcf_cmd_qh(gcf_report** out);
GCF_API gcf_status gcf_cmd_verify_all(const gcf_config* config, gcf_report** out);

/* 0 when every check in the report passed, 1 otherwise. */
GCF_API int gcf_report_status(const gcf_report* report);
GCF_API size_t gcf_report_table_count(const gcf_report* report);
GCF_API const char* gcf_report_table_title(const gcf_report* report, size_t table);
GCF_API size_t gcf_report_column_count(const gcf_report* report, size_t table);
GCF_API const char* gcf_report_column(const gcf_report* report, size_t table, size_t column);
GCF_API size_t gcf_report_row_count(const gcf_report* report, size_t table);
GCF_API const char* gcf_report_cell(const gcf_report* report, size_t table, size_t row, size_t column);
/* format: "csv" or "json". */
GCF_API gcf_status gcf_report_render(const gcf_report* report, const char* format, char** out);
/* SVG document, or NULL if the command produced none. */
GCF_API const char* gcf_report_svg(const gcf_report* report);
GCF_API void gcf_report_free(gcf_report* report);

/* Truncated Novikov series, e.g. "2*T^(1/2) - T + O(T^(3))". */
GCF_API gcf_status gcf_series_parse(const char* text, gcf_series** out);
GCF_API gcf_status gcf_series_add(const gcf_series* a, const gcf_series* b, gcf_series** out);
GCF_API gcf_status gcf_series_mul(const gcf_series* a, const gcf_series* b, gcf_series** out);
GCF_API gcf_status gcf_series_invert(const gcf_series* s, const char* order, gcf_series** out);
/* Writes the valuation as "p/q", or "inf" for a series with no known term. */
GCF_API gcf_status gcf_series_valuation(const gcf_series* s, char** out);
GCF_API gcf_status gcf_series_to_string(const gcf_series* s, char** out);
GCF_API void gcf_series_free(gcf_series* s);

/* Cut polytope of the configured parameters. */
GCF_API gcf_status gcf_polytope_cut(const gcf_config* config, gcf_polytope** out);
GCF_API size_t gcf_polytope_facet_count(const gcf_polytope* p);
/* point: three rationals separated by ','. kind: 0 interior, 1 on faces, 2 outside. */
GCF_API gcf_status gcf_polytope_classify(const gcf_polytope* p, const char* point, int* kind);
GCF_API void gcf_polytope_free(gcf_polytope* p);

#ifdef __cplusplus
}
#endif

#endif
