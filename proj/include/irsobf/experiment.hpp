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

#ifndef IRSOBF_EXPERIMENT_HPP
#define IRSOBF_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irsobf/scenario.hpp"

namespace irsobf {

/// Aggregate over the trials of one scenario.
struct ResultRow {
    std::string scenario_id;
    std::size_t n_users = 0;
    std::size_t n_elements = 0;
    std::string strategy;
    std::string scheduler;
    double eta = 0.0;
    double sum_rate = 0.0;
    double stderr_ = 0.0; // standard error of the mean over trials
    std::optional<double> analytic_ref;
    std::uint64_t seed = 0;

    std::uint64_t trials = 0;
    std::uint64_t frames = 0;
    double throughput_min = 0.0; // over users and trials
    double throughput_mean = 0.0;
    double throughput_max = 0.0;

    std::vector<double> trial_sum_rates; // in trial order
    std::vector<double> trial_analytic;  // empty when there is no reference
};

/// Runs every trial of every scenario. `threads` = 0 uses the hardware
/// concurrency, 1 runs sequentially; results do not depend on it.
std::vector<ResultRow> run_experiment(const std::vector<Scenario>& scenarios, unsigned threads = 0);
std::vector<ResultRow> run_experiment(const ScenarioSet& set, unsigned threads = 0);

enum class OutputFormat { csv, jsonl };

/// Column order of both output formats.
inline constexpr const char* kResultColumns[] = {"scenario_id", "K",       "N",      "strategy",     "scheduler",
                                                 "eta",         "sum_rate", "stderr", "analytic_ref", "seed"};

/// Writes the rows; numbers carry 6 significant digits. Throws
/// std::invalid_argument for an empty row list and std::runtime_error when the
/// stream fails.
void emit_results(const std::vector<ResultRow>& rows, OutputFormat format, std::ostream& out);
std::string emit_results(const std::vector<ResultRow>& rows, OutputFormat format);

} // namespace irsobf

#endif
