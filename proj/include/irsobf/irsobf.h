/* SPDX-License-Identifier: Apache-2.0
 *
 * irsobf - opportunistic beamforming through intelligent reflecting surfaces
 * Copyright (C) 2026 The irsobf authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of libirsobf. Objects are opaque handles created and destroyed
 * through this header; every fallible call returns an irsobf_status and leaves
 * a message for irsobf_last_error() (per thread).
 */

#ifndef IRSOBF_IRSOBF_H
#define IRSOBF_IRSOBF_H

#include <stddef.h>
#include <stdint.h>

#if defined(IRSOBF_BUILDING_LIBRARY)
#define IRSOBF_API __attribute__((visibility("default")))
#else
#define IRSOBF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum irsobf_status {
    IRSOBF_OK = 0,
    IRSOBF_ERR_INVALID_ARGUMENT = 1, /* null handle, bad index, bad format */
    IRSOBF_ERR_CONFIG = 2,           /* unknown key, malformed or out-of-range value */
    IRSOBF_ERR_IO = 3,               /* file could not be read or written */
    IRSOBF_ERR_RUNTIME = 4,          /* numerical or internal failure during a run */
    IRSOBF_ERR_BUFFER_TOO_SMALL = 5  /* output truncated; see the `needed` argument */
} irsobf_status;

typedef enum irsobf_format { IRSOBF_FORMAT_CSV = 0, IRSOBF_FORMAT_JSONL = 1 } irsobf_format;

typedef struct irsobf_config irsobf_config;
typedef struct irsobf_results irsobf_results;

/* One aggregated scenario. String members stay valid as long as the owning
 * irsobf_results handle. */
typedef struct irsobf_row {
    const char* scenario_id;
    size_t n_users;
    size_t n_elements;
    const char* strategy;
    const char* scheduler;
    double eta;
    double sum_rate;
    double stderr_mean;
    int has_analytic_ref;
    double analytic_ref;
    uint64_t seed;
    uint64_t trials;
    uint64_t frames;
    double throughput_min;
    double throughput_mean;
    double throughput_max;
} irsobf_row;

IRSOBF_API const char* irsobf_version(void);

/* Message of the last failed call on this thread ("" when none). */
IRSOBF_API const char* irsobf_last_error(void);
/* Configuration key blamed by the last IRSOBF_ERR_CONFIG failure ("" when none). */
IRSOBF_API const char* irsobf_last_error_key(void);

/* A configuration starts with the documented defaults. */
IRSOBF_API irsobf_status irsobf_config_create(irsobf_config** out);
IRSOBF_API void irsobf_config_destroy(irsobf_config* config);
/* Replaces the whole configuration with a built-in preset ("fig1", "fig2"). */
IRSOBF_API irsobf_status irsobf_config_load_preset(irsobf_config* config, const char* name);
/* Applies "key = value" lines on top of the current configuration. The handle
 * is unchanged when the call fails. */
IRSOBF_API irsobf_status irsobf_config_parse(irsobf_config* config, const char* text);
IRSOBF_API irsobf_status irsobf_config_parse_file(irsobf_config* config, const char* path);
/* Sets a single key; the same rules as one line of irsobf_config_parse. */
IRSOBF_API irsobf_status irsobf_config_set(irsobf_config* config, const char* key, const char* value);
/* Number of scenarios the configuration expands to (validates the whole set). */
IRSOBF_API irsobf_status irsobf_config_scenario_count(const irsobf_config* config, size_t* out);
/* Every resolved parameter as "key = value" lines. Writes at most `capacity`
 * bytes including the terminator; `needed` (optional) receives the full size. */
IRSOBF_API irsobf_status irsobf_config_echo(const irsobf_config* config, char* buffer, size_t capacity,
                                            size_t* needed);

/* Runs all trials of all scenarios. threads = 0 picks the hardware concurrency;
 * the results do not depend on the thread count. */
IRSOBF_API irsobf_status irsobf_run(const irsobf_config* config, unsigned threads, irsobf_results** out);
IRSOBF_API void irsobf_results_destroy(irsobf_results* results);
IRSOBF_API size_t irsobf_results_count(const irsobf_results* results);
IRSOBF_API irsobf_status irsobf_results_get(const irsobf_results* results, size_t index, irsobf_row* out);
/* Renders the rows; buffer semantics as irsobf_config_echo. */
IRSOBF_API irsobf_status irsobf_results_format(const irsobf_results* results, irsobf_format format, char* buffer,
                                               size_t capacity, size_t* needed);
/* Writes the rows to `path`; NULL or "-" writes to standard output. */
IRSOBF_API irsobf_status irsobf_results_write(const irsobf_results* results, irsobf_format format,
                                              const char* path);

#ifdef __cplusplus
}
#endif

#endif
