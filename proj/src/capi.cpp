// SPDX-License-Identifier: Apache-2.0
//
// irsobf - opportunistic beamforming through intelligent reflecting surfaces
// Copyright (C) 2026 The irsobf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irsobf/irsobf.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "irsobf/experiment.hpp"
#include "irsobf/scenario.hpp"

struct irsobf_config {
    irsobf::ScenarioSet set;
};

struct irsobf_results {
    std::vector<irsobf::ResultRow> rows;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_key;

irsobf_status fail(irsobf_status status, std::string message, std::string key = {})
{
    g_error = std::move(message);
    g_error_key = std::move(key);
    return status;
}

/// Runs `body`, mapping exceptions onto status codes.
template <typename F>
irsobf_status guarded(F&& body)
{
    g_error.clear();
    g_error_key.clear();
    try {
        return body();
    } catch (const irsobf::ConfigError& e) {
        return fail(IRSOBF_ERR_CONFIG, e.what(), e.key());
    } catch (const std::invalid_argument& e) {
        return fail(IRSOBF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(IRSOBF_ERR_RUNTIME, "out of memory");
    } catch (const std::exception& e) {
        return fail(IRSOBF_ERR_RUNTIME, e.what());
    } catch (...) {
        return fail(IRSOBF_ERR_RUNTIME, "unknown error");
    }
}

irsobf_status copy_out(const std::string& text, char* buffer, std::size_t capacity, std::size_t* needed)
{
    if (needed) {
        *needed = text.size() + 1;
    }
    if (!buffer) {
        return capacity == 0 ? IRSOBF_OK : fail(IRSOBF_ERR_INVALID_ARGUMENT, "buffer is null");
    }
    if (capacity < text.size() + 1) {
        if (capacity > 0) {
            std::memcpy(buffer, text.data(), capacity - 1);
            buffer[capacity - 1] = '\0';
        }
        return fail(IRSOBF_ERR_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(capacity) + " bytes, " +
                                                     std::to_string(text.size() + 1) + " needed");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return IRSOBF_OK;
}

bool parse_format(irsobf_format format, irsobf::OutputFormat& out)
{
    switch (format) {
    case IRSOBF_FORMAT_CSV: out = irsobf::OutputFormat::csv; return true;
    case IRSOBF_FORMAT_JSONL: out = irsobf::OutputFormat::jsonl; return true;
    }
    return false;
}

} // namespace

extern "C" {

IRSOBF_API const char* irsobf_version(void)
{
    return "0.1.0";
}

IRSOBF_API const char* irsobf_last_error(void)
{
    return g_error.c_str();
}

IRSOBF_API const char* irsobf_last_error_key(void)
{
    return g_error_key.c_str();
}

IRSOBF_API irsobf_status irsobf_config_create(irsobf_config** out)
{
    return guarded([&] {
        if (!out) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_config_create: output pointer is null");
        }
        *out = new irsobf_config{};
        return IRSOBF_OK;
    });
}

IRSOBF_API void irsobf_config_destroy(irsobf_config* config)
{
    delete config;
}

IRSOBF_API irsobf_status irsobf_config_load_preset(irsobf_config* config, const char* name)
{
    return guarded([&] {
        if (!config || !name) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_config_load_preset: null argument");
        }
        config->set = irsobf::load_preset(name);
        return IRSOBF_OK;
    });
}

IRSOBF_API irsobf_status irsobf_config_parse(irsobf_config* config, const char* text)
{
    return guarded([&] {
        if (!config || !text) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_config_parse: null argument");
        }
        config->set = irsobf::parse_scenario(text, config->set);
        return IRSOBF_OK;
    });
}

IRSOBF_API irsobf_status irsobf_config_parse_file(irsobf_config* config, const char* path)
{
    return guarded([&] {
        if (!config || !path) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_config_parse_file: null argument");
        }
        std::ifstream in(path);
        if (!in) {
            return fail(IRSOBF_ERR_IO, std::string("cannot open config file '") + path + "'");
        }
        std::ostringstream text;
        text << in.rdbuf();
        if (in.bad()) {
            return fail(IRSOBF_ERR_IO, std::string("cannot read config file '") + path + "'");
        }
        config->set = irsobf::parse_scenario(text.str(), config->set);
        return IRSOBF_OK;
    });
}

IRSOBF_API irsobf_status irsobf_config_set(irsobf_config* config, const char* key, const char* value)
{
    return guarded([&] {
        if (!config || !key || !value) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_config_set: null argument");
        }
        irsobf::ScenarioSet next = config->set;
        irsobf::apply_setting(next, key, value);
        config->set = std::move(next);
        return IRSOBF_OK;
    });
}

IRSOBF_API irsobf_status irsobf_config_scenario_count(const irsobf_config* config, size_t* out)
{
    return guarded([&] {
        if (!config || !out) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_config_scenario_count: null argument");
        }
        *out = config->set.expand().size();
        return IRSOBF_OK;
    });
}

IRSOBF_API irsobf_status irsobf_config_echo(const irsobf_config* config, char* buffer, size_t capacity,
                                            size_t* needed)
{
    return guarded([&] {
        if (!config) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_config_echo: null config");
        }
        return copy_out(config->set.echo(), buffer, capacity, needed);
    });
}

IRSOBF_API irsobf_status irsobf_run(const irsobf_config* config, unsigned threads, irsobf_results** out)
{
    return guarded([&] {
        if (!config || !out) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_run: null argument");
        }
        auto results = std::make_unique<irsobf_results>();
        results->rows = irsobf::run_experiment(config->set, threads);
        *out = results.release();
        return IRSOBF_OK;
    });
}

IRSOBF_API void irsobf_results_destroy(irsobf_results* results)
{
    delete results;
}

IRSOBF_API size_t irsobf_results_count(const irsobf_results* results)
{
    return results ? results->rows.size() : 0;
}

IRSOBF_API irsobf_status irsobf_results_get(const irsobf_results* results, size_t index, irsobf_row* out)
{
    return guarded([&] {
        if (!results || !out) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_results_get: null argument");
        }
        if (index >= results->rows.size()) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_results_get: index " + std::to_string(index) +
                                                         " out of range (" + std::to_string(results->rows.size()) +
                                                         " rows)");
        }
        const irsobf::ResultRow& r = results->rows[index];
        *out = irsobf_row{r.scenario_id.c_str(),
                          r.n_users,
                          r.n_elements,
                          r.strategy.c_str(),
                          r.scheduler.c_str(),
                          r.eta,
                          r.sum_rate,
                          r.stderr_,
                          r.analytic_ref ? 1 : 0,
                          r.analytic_ref.value_or(0.0),
                          r.seed,
                          r.trials,
                          r.frames,
                          r.throughput_min,
                          r.throughput_mean,
                          r.throughput_max};
        return IRSOBF_OK;
    });
}

IRSOBF_API irsobf_status irsobf_results_format(const irsobf_results* results, irsobf_format format, char* buffer,
                                               size_t capacity, size_t* needed)
{
    return guarded([&] {
        irsobf::OutputFormat fmt;
        if (!results || !parse_format(format, fmt)) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_results_format: null results or unknown format");
        }
        return copy_out(irsobf::emit_results(results->rows, fmt), buffer, capacity, needed);
    });
}

IRSOBF_API irsobf_status irsobf_results_write(const irsobf_results* results, irsobf_format format, const char* path)
{
    return guarded([&] {
        irsobf::OutputFormat fmt;
        if (!results || !parse_format(format, fmt)) {
            return fail(IRSOBF_ERR_INVALID_ARGUMENT, "irsobf_results_write: null results or unknown format");
        }
        const std::string text = irsobf::emit_results(results->rows, fmt);
        if (!path || std::strcmp(path, "-") == 0) {
            std::cout << text << std::flush;
            return std::cout ? IRSOBF_OK : fail(IRSOBF_ERR_IO, "cannot write to standard output");
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            return fail(IRSOBF_ERR_IO, std::string("cannot open output file '") + path + "'");
        }
        file << text;
        file.flush();
        if (!file) {
            return fail(IRSOBF_ERR_IO, std::string("cannot write output file '") + path + "'");
        }
        return IRSOBF_OK;
    });
}

} // extern "C"
