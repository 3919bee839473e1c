// Copyright 2026 The hdgvp Authors
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

#ifndef HDGVP_H_
#define HDGVP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(HDGVP_BUILDING_LIBRARY)
#define HDGVP_API __attribute__((visibility("default")))
#else
#define HDGVP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hdg_status {
  HDG_OK = 0,
  HDG_ERR_INVALID_ARGUMENT = 1,
  HDG_ERR_CONFIG = 2,
  HDG_ERR_IO = 3,
  HDG_ERR_NUMERICAL = 4,
  HDG_ERR_OVERFLOW = 5,
  HDG_ERR_INTERNAL = 6
} hdg_status;

typedef struct hdg_config hdg_config;
typedef struct hdg_state hdg_state;
typedef struct hdg_table hdg_table;

typedef struct hdg_record {
  double t;
  double mass;
  double momentum;
  double kinetic;
  double electric;
  double total_energy;
  double l2_standard;
  double l2_weighted;
  double alpha;
  double Einf;
  double jump_dissipation;
} hdg_record;

typedef struct hdg_state_info {
  double t;
  double alpha;
  double alpha0;
  double gamma;
  double L;
  int Nx;
  int N;
  int k;
  uint64_t scenario_hash;
} hdg_state_info;

typedef struct hdg_error_report {
  double l2_weighted_error;
  double l2_standard_error;
} hdg_error_report;

typedef struct hdg_convergence_row {
  int Nx;
  int N;
  int k;
  double h;
  double dt;
  double error_weighted;
  double error_standard;
  double order; /* NaN on the first row */
} hdg_convergence_row;

typedef struct hdg_run_summary {
  size_t steps;
  size_t records;
  int numerical_failure; /* 1 when the run aborted; files hold the last valid data */
} hdg_run_summary;

/* Called once per diagnostics sample. */
typedef void (*hdg_record_callback)(const hdg_record* record, void* user);

/* Message of the last failed call on this thread; never NULL. */
HDGVP_API const char* hdg_last_error(void);
HDGVP_API const char* hdg_version(void);
HDGVP_API const char* hdg_csv_header(void);

/* Configuration. */
HDGVP_API hdg_status hdg_config_default(const char* scenario, hdg_config** out);
HDGVP_API hdg_status hdg_config_parse(const char* text, hdg_config** out);
HDGVP_API hdg_status hdg_config_load(const char* path, hdg_config** out);
HDGVP_API hdg_status hdg_config_set(hdg_config* cfg, const char* key, const char* value);
/* Copies the value (NUL-terminated) into buf; *needed receives the full length + 1. */
HDGVP_API hdg_status hdg_config_get(const hdg_config* cfg, const char* key, char* buf, size_t len,
                                    size_t* needed);
typedef enum hdg_output_kind { HDG_OUTPUT_CSV = 0, HDG_OUTPUT_SNAPSHOT = 1 } hdg_output_kind;
/* Resolved output file path, same buffer convention as hdg_config_get. */
HDGVP_API hdg_status hdg_config_output_path(const hdg_config* cfg, hdg_output_kind kind, char* buf,
                                            size_t len, size_t* needed);
HDGVP_API hdg_status hdg_config_validate(const hdg_config* cfg);
HDGVP_API void hdg_config_free(hdg_config* cfg);

/* Kinetic states. */
HDGVP_API hdg_status hdg_state_create(const hdg_config* cfg, hdg_state** out);
HDGVP_API hdg_status hdg_state_read(const char* path, hdg_state** out);
HDGVP_API hdg_status hdg_state_write(const hdg_state* state, const char* path);
HDGVP_API hdg_status hdg_state_info_get(const hdg_state* state, hdg_state_info* out);
HDGVP_API hdg_status hdg_state_coeff(const hdg_state* state, int n, int j, int m, double* out);
/* f(x, v) reconstructed from the modes. */
HDGVP_API hdg_status hdg_state_eval(const hdg_state* state, double x, double v, double* out);
HDGVP_API hdg_status hdg_state_record(const hdg_state* state, const hdg_config* cfg, hdg_record* out);
HDGVP_API void hdg_state_free(hdg_state* state);

/* Advances `state` in place to the configured T. */
HDGVP_API hdg_status hdg_state_advance(hdg_state* state, const hdg_config* cfg,
                                       hdg_record_callback cb, void* user);

/* Full run: initial data, integration, CSV and final snapshot under
 * output_dir (NULL keeps the configured one). */
HDGVP_API hdg_status hdg_run(const hdg_config* cfg, const char* output_dir, hdg_record_callback cb,
                             void* user, hdg_run_summary* summary);

HDGVP_API hdg_status hdg_compare_states(const hdg_state* a, const hdg_state* reference, double v_max,
                                        hdg_error_report* out);
HDGVP_API hdg_status hdg_compare_files(const char* a, const char* b, double v_max,
                                       hdg_error_report* out);

/* Convergence ladder against a cached reference. */
HDGVP_API hdg_status hdg_convergence(const hdg_config* cfg, int levels, int degree,
                                     const char* output_dir, int verbose, hdg_table** out);
HDGVP_API size_t hdg_table_rows(const hdg_table* table);
HDGVP_API hdg_status hdg_table_row(const hdg_table* table, size_t i, hdg_convergence_row* out);
/* Formatted table text, owned by the table. */
HDGVP_API const char* hdg_table_text(const hdg_table* table);
HDGVP_API void hdg_table_free(hdg_table* table);

/* orders[i] = log2(errors[i] / errors[i + 1]) for n levels (n - 1 outputs). */
HDGVP_API hdg_status hdg_convergence_orders(const double* errors, const double* h, size_t n,
                                            double* orders);

#ifdef __cplusplus
}
#endif

#endif  // HDGVP_H_
