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

#ifndef IRSOBF_SCHEDULER_HPP
#define IRSOBF_SCHEDULER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "irsobf/phase_vector.hpp"

namespace irsobf {

/// Initial T_k of the finite-window PF rule.
inline constexpr double kPfInitialThroughput = 1e-6;

/// Per-user throughput trackers.
///
/// Finite window t_c: T_k <- (1 - 1/t_c) T_k + (1/t_c) R_k 1{k scheduled}.
/// Infinite window: T_k is the running mean, over all frames so far, of the rate
/// delivered to k (zero in frames where k is not served).
class SchedulerState {
public:
    static SchedulerState finite(std::size_t n_users, double window, double initial = kPfInitialThroughput);
    static SchedulerState infinite(std::size_t n_users);

    /// Current T_k. Under the infinite window it is derived from the delivered
    /// totals on demand, so the per-frame update stays O(1).
    [[nodiscard]] const std::vector<double>& throughputs() const;
    [[nodiscard]] std::uint64_t frame() const noexcept { return frame_; }
    [[nodiscard]] std::optional<double> window() const noexcept { return window_; }
    [[nodiscard]] bool infinite_window() const noexcept { return !window_.has_value(); }
    [[nodiscard]] std::size_t size() const noexcept { return throughputs_.size(); }

    /// Total rate delivered to each user since the start (infinite window only
    /// keeps this exact; the finite filter tracks it too for reporting).
    [[nodiscard]] const std::vector<double>& delivered() const noexcept { return delivered_; }

private:
    friend void update_throughput(SchedulerState& state, std::optional<std::size_t> user, double rate);
    friend std::size_t pf_schedule(std::span<const double> rates, const SchedulerState& state);

    mutable std::vector<double> throughputs_;
    mutable bool stale_ = false; // infinite window: throughputs_ lags delivered_
    std::vector<double> delivered_;
    std::size_t unserved_ = 0; // users with nothing delivered yet
    std::uint64_t frame_ = 0;
    std::optional<double> window_;
};

struct FrameOutcome {
    std::optional<std::size_t> scheduled_user; // empty when nobody transmits
    double rate = 0.0;                         // log2(1 + snrs[scheduled_user])
    std::vector<double> snrs;
};

/// argmax snr, lowest index on ties. Throws std::invalid_argument on empty input.
std::size_t opportunistic_schedule(std::span<const double> snrs);

/// argmax R_k / T_k, lowest index on ties. Under the infinite window a user with
/// T_k = 0 has unbounded priority; several such users are ordered by rate.
/// Throws std::invalid_argument when the sizes differ or the input is empty.
std::size_t pf_schedule(std::span<const double> rates, const SchedulerState& state);

/// Advances the frame counter and applies one step of the window filter.
void update_throughput(SchedulerState& state, std::optional<std::size_t> user, double rate);
void update_throughput(SchedulerState& state, const FrameOutcome& outcome);

/// Bookkeeping for the class-match baseline: when each user was last served.
class RoundRobinState {
public:
    explicit RoundRobinState(std::size_t n_users) : last_served_(n_users, 0) {}

    [[nodiscard]] std::uint64_t last_served(std::size_t user) const { return last_served_.at(user); }

private:
    friend std::optional<std::size_t> genie_class_match_schedule(const PhaseVector&, std::span<const PhaseVector>,
                                                                 RoundRobinState&, double);
    std::vector<std::uint64_t> last_served_;
    std::uint64_t clock_ = 0;
};

/// Serves a user only when the IRS currently sits in that user's beamforming
/// configuration. Among several matching users the one served longest ago wins
/// (lowest index first), which alternates between users sharing a configuration.
/// Returns nullopt when no configuration matches.
std::optional<std::size_t> genie_class_match_schedule(const PhaseVector& current,
                                                      std::span<const PhaseVector> user_bf_configs,
                                                      RoundRobinState& rr, double tol = 1e-9);

} // namespace irsobf

#endif
