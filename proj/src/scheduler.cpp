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

#include "irsobf/scheduler.hpp"

#include <sstream>
#include <stdexcept>

namespace irsobf {

SchedulerState SchedulerState::finite(std::size_t n_users, double window, double initial)
{
    if (n_users == 0) {
        throw std::invalid_argument("SchedulerState: need at least one user");
    }
    if (!(window >= 1.0)) {
        std::ostringstream msg;
        msg << "SchedulerState: window t_c = " << window << " must be >= 1";
        throw std::invalid_argument(msg.str());
    }
    SchedulerState s;
    s.throughputs_.assign(n_users, initial);
    s.delivered_.assign(n_users, 0.0);
    s.window_ = window;
    return s;
}

SchedulerState SchedulerState::infinite(std::size_t n_users)
{
    if (n_users == 0) {
        throw std::invalid_argument("SchedulerState: need at least one user");
    }
    SchedulerState s;
    s.throughputs_.assign(n_users, 0.0);
    s.delivered_.assign(n_users, 0.0);
    s.unserved_ = n_users;
    return s;
}

const std::vector<double>& SchedulerState::throughputs() const
{
    if (stale_) {
        const auto t = static_cast<double>(frame_);
        for (std::size_t k = 0; k < throughputs_.size(); ++k) {
            throughputs_[k] = delivered_[k] / t;
        }
        stale_ = false;
    }
    return throughputs_;
}

std::size_t opportunistic_schedule(std::span<const double> snrs)
{
    if (snrs.empty()) {
        throw std::invalid_argument("opportunistic_schedule: no users");
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < snrs.size(); ++k) {
        if (snrs[k] > snrs[best]) {
            best = k;
        }
    }
    return best;
}

std::size_t pf_schedule(std::span<const double> rates, const SchedulerState& state)
{
    if (rates.empty() || rates.size() != state.size()) {
        std::ostringstream msg;
        msg << "pf_schedule: " << rates.size() << " rates for " << state.size() << " throughput trackers";
        throw std::invalid_argument(msg.str());
    }

    if (state.infinite_window()) {
        // T_k = D_k / t with a common t, so argmax R_k / T_k = argmax R_k / D_k.
        const auto& d = state.delivered_;
        if (state.unserved_ > 0) {
            // Unserved users first (R/0 = +inf), ordered by rate among themselves.
            std::optional<std::size_t> unserved;
            for (std::size_t k = 0; k < rates.size(); ++k) {
                if (d[k] <= 0.0 && (!unserved || rates[k] > rates[*unserved])) {
                    unserved = k;
                }
            }
            return *unserved;
        }
        std::size_t best = 0;
        double best_metric = rates[0] / d[0];
        for (std::size_t k = 1; k < rates.size(); ++k) {
            const double metric = rates[k] / d[k];
            if (metric > best_metric) {
                best_metric = metric;
                best = k;
            }
        }
        return best;
    }

    const auto& t = state.throughputs();
    std::size_t best = 0;
    double best_metric = rates[0] / t[0];
    for (std::size_t k = 1; k < rates.size(); ++k) {
        const double metric = rates[k] / t[k];
        if (metric > best_metric) {
            best_metric = metric;
            best = k;
        }
    }
    return best;
}

void update_throughput(SchedulerState& state, std::optional<std::size_t> user, double rate)
{
    if (user && *user >= state.size()) {
        throw std::out_of_range("update_throughput: scheduled user out of range");
    }
    ++state.frame_;
    if (user) {
        double& d = state.delivered_[*user];
        if (!state.window_ && d <= 0.0 && d + rate > 0.0) {
            --state.unserved_;
        }
        d += rate;
    }

    if (state.window_) {
        const double a = 1.0 / *state.window_;
        for (std::size_t k = 0; k < state.size(); ++k) {
            const double served = (user && *user == k) ? rate : 0.0;
            state.throughputs_[k] = (1.0 - a) * state.throughputs_[k] + a * served;
        }
    } else {
        state.stale_ = true;
    }
}

void update_throughput(SchedulerState& state, const FrameOutcome& outcome)
{
    update_throughput(state, outcome.scheduled_user, outcome.rate);
}

std::optional<std::size_t> genie_class_match_schedule(const PhaseVector& current,
                                                      std::span<const PhaseVector> user_bf_configs,
                                                      RoundRobinState& rr, double tol)
{
    if (user_bf_configs.size() != rr.last_served_.size()) {
        throw std::invalid_argument("genie_class_match_schedule: round-robin state size differs from user count");
    }
    std::optional<std::size_t> pick;
    for (std::size_t k = 0; k < user_bf_configs.size(); ++k) {
        if (!current.matches(user_bf_configs[k], tol)) {
            continue;
        }
        if (!pick || rr.last_served_[k] < rr.last_served_[*pick]) {
            pick = k;
        }
    }
    if (pick) {
        rr.last_served_[*pick] = ++rr.clock_;
    }
    return pick;
}

} // namespace irsobf
