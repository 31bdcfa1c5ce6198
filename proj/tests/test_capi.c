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

/* Exercises the C interface from C, linking only the shared library. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gcfloer/gcfloer.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static void test_series(void) {
  gcf_series *a = NULL, *b = NULL, *p = NULL, *inv = NULL;
  char* text = NULL;
  EXPECT(gcf_series_parse("1 + T", &a) == GCF_OK);
  EXPECT(gcf_series_parse("1 - T", &b) == GCF_OK);
  EXPECT(gcf_series_mul(a, b, &p) == GCF_OK);
  EXPECT(gcf_series_to_string(p, &text) == GCF_OK);
  EXPECT(text && strcmp(text, "1 - T^(2)") == 0);
  gcf_string_free(text);
  EXPECT(gcf_series_invert(a, "3", &inv) == GCF_OK);
  EXPECT(gcf_series_to_string(inv, &text) == GCF_OK);
  EXPECT(text && strcmp(text, "1 - T^(1) + T^(2) + O(T^(3))") == 0);
  gcf_string_free(text);
  EXPECT(gcf_series_valuation(p, &text) == GCF_OK);
  EXPECT(text && strcmp(text, "0") == 0);
  gcf_string_free(text);
  gcf_series_free(inv);
  gcf_series_free(p);
  gcf_series_free(b);
  gcf_series_free(a);

  gcf_series* bad = NULL;
  EXPECT(gcf_series_parse("T^(1/0)", &bad) == GCF_ERR_PARSE);
  EXPECT(bad == NULL);
  EXPECT(strlen(gcf_last_error()) > 0);
  EXPECT(strcmp(gcf_status_name(GCF_ERR_PARSE), "Parse") == 0);

  gcf_series *zero = NULL, *zinv = NULL;
  EXPECT(gcf_series_parse("0", &zero) == GCF_OK);
  EXPECT(gcf_series_invert(zero, "3", &zinv) == GCF_ERR_ZERO_SERIES);
  gcf_series_free(zero);
}

static void test_config_and_reports(void) {
  gcf_config* cfg = NULL;
  gcf_report* rep = NULL;
  char* text = NULL;
  EXPECT(gcf_config_default(&cfg) == GCF_OK);
  EXPECT(gcf_config_format(cfg) == 0);
  EXPECT(gcf_config_set(cfg, "format", "json") == GCF_OK);
  EXPECT(gcf_config_format(cfg) == 1);
  EXPECT(gcf_config_set(cfg, "nonsense", "1") == GCF_ERR_PARSE);
  EXPECT(gcf_config_to_json(cfg, &text) == GCF_OK);
  EXPECT(text && strstr(text, "\"format\": \"json\"") != NULL);
  gcf_string_free(text);

  EXPECT(gcf_cmd_newton(cfg, &rep) == GCF_OK);
  EXPECT(gcf_report_status(rep) == 0);
  EXPECT(gcf_report_table_count(rep) >= 1);
  EXPECT(gcf_report_table_title(rep, 99) == NULL);
  EXPECT(gcf_report_render(rep, "csv", &text) == GCF_OK);
  EXPECT(text && strstr(text, "5/6") != NULL);
  gcf_string_free(text);
  EXPECT(gcf_report_render(rep, "yaml", &text) == GCF_ERR_PARSE);
  gcf_report_free(rep);

  EXPECT(gcf_cmd_crit(cfg, "7/2", &rep) == GCF_OK);
  EXPECT(gcf_report_status(rep) == 0);
  gcf_report_free(rep);

  EXPECT(gcf_cmd_clifford(3, "1,1,1", &rep) == GCF_OK);
  EXPECT(strcmp(gcf_report_column(rep, 0, 3), "hh0") == 0);
  EXPECT(strcmp(gcf_report_cell(rep, 0, 0, 3), "1") == 0);
  gcf_report_free(rep);

  EXPECT(gcf_cmd_qh(&rep) == GCF_OK);
  gcf_report_free(rep);

  gcf_polytope* poly = NULL;
  int kind = -1;
  EXPECT(gcf_polytope_cut(cfg, &poly) == GCF_OK);
  EXPECT(gcf_polytope_facet_count(poly) == 6);
  EXPECT(gcf_polytope_classify(poly, "13/6,-1/2,5/6", &kind) == GCF_OK && kind == 0);
  EXPECT(gcf_polytope_classify(poly, "0,0,0", &kind) == GCF_OK && kind == 1);
  EXPECT(gcf_polytope_classify(poly, "100,0,0", &kind) == GCF_OK && kind == 2);
  EXPECT(gcf_polytope_classify(poly, "1,2", &kind) == GCF_ERR_DIMENSION_MISMATCH);
  gcf_polytope_free(poly);
  gcf_config_free(cfg);

  EXPECT(gcf_config_parse("{\"r\": \"3\"}", &cfg) == GCF_OK);
  EXPECT(gcf_cmd_validate(cfg, &rep) == GCF_OK);
  EXPECT(gcf_report_status(rep) == 1);
  gcf_report_free(rep);
  gcf_config_free(cfg);

  EXPECT(gcf_config_load("/nonexistent.json", &cfg) == GCF_ERR_IO);
  EXPECT(gcf_config_parse("{", &cfg) == GCF_ERR_PARSE);
  EXPECT(gcf_cmd_qh(NULL) == GCF_ERR_INVALID_ARGUMENT);
}

int main(void) {
  EXPECT(strlen(gcf_version()) > 0);
  test_series();
  test_config_and_reports();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
