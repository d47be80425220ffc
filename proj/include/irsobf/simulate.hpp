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

#ifndef IRSOBF_SIMULATE_HPP
#define IRSOBF_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "irsobf/channel.hpp"
#include "irsobf/scenario.hpp"
#include "irsobf/scheduler.hpp"

namespace irsobf {

struct RunOptions {
    bool keep_trace = false; // record one FrameOutcome per frame
};

/// Everything one trial of one scenario produces.
struct TrialResult {
    /// Mean over frames of the rate delivered to the scheduled user.
    double sum_rate = 0.0;
    /// Per-user running-mean throughput T_k after the last frame.
    std::vector<double> throughputs;
    /// Per-user coherent beamforming rate R_k^BF of the trial's (first) channel state.
    std::vector<double> bf_rates;
    /// Closed-form reference for this trial, when the scenario has one.
    std::optional<double> analytic;
    std::vector<PathLossFactors> pl;
    std::vector<Point> positions;
    std::vector<std::uint64_t> schedule_counts;
    std::uint64_t idle_frames = 0; // frames in which nobody was served (genie only)
    std::vector<FrameOutcome> trace;
};

/// Simulates `scenario.frames` frames of trial `trial`. All randomness derives
/// from (scenario.seed, trial), with one stream per purpose and per user, so the
/// first K users of a trial are identical whatever the total number of users.
/// Deterministic; safe to call concurrently.
TrialResult run_frames(const Scenario& scenario, std::uint64_t trial, const RunOptions& options = {});

/// User positions of one trial under the scenario's placement rule.
std::vector<Point> place_users(const Scenario& scenario, std::uint64_t trial);

} // namespace irsobf

#endif
