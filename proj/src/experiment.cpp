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

#include "irsobf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "irsobf/simulate.hpp"

namespace irsobf {

namespace {

struct TrialSummary {
    double sum_rate = 0.0;
    std::optional<double> analytic;
    double t_min = 0.0;
    double t_sum = 0.0;
    double t_max = 0.0;
};

struct Task {
    std::size_t scenario;
    std::uint64_t trial;
};

TrialSummary summarize(const TrialResult& r)
{
    TrialSummary s;
    s.sum_rate = r.sum_rate;
    s.analytic = r.analytic;
    const auto [lo, hi] = std::minmax_element(r.throughputs.begin(), r.throughputs.end());
    s.t_min = *lo;
    s.t_max = *hi;
    for (double t : r.throughputs) {
        s.t_sum += t;
    }
    return s;
}

ResultRow aggregate(const Scenario& sc, std::span<const TrialSummary> trials)
{
    ResultRow row;
    row.scenario_id = sc.id();
    row.n_users = sc.n_users;
    row.n_elements = sc.n_elements;
    row.strategy = sc.strategy.name();
    row.scheduler = sc.scheduler.name();
    row.eta = sc.regime.correlation_eta;
    row.seed = sc.seed;
    row.trials = trials.size();
    row.frames = sc.frames;

    const auto n = static_cast<double>(trials.size());
    double mean = 0.0;
    for (const auto& t : trials) {
        row.trial_sum_rates.push_back(t.sum_rate);
        mean += t.sum_rate;
    }
    mean /= n;
    double ss = 0.0;
    for (const auto& t : trials) {
        ss += (t.sum_rate - mean) * (t.sum_rate - mean);
    }
    row.sum_rate = mean;
    row.stderr_ = trials.size() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0;

    const bool has_ref = std::all_of(trials.begin(), trials.end(), [](const auto& t) { return t.analytic.has_value(); });
    if (has_ref) {
        double acc = 0.0;
        for (const auto& t : trials) {
            row.trial_analytic.push_back(*t.analytic);
            acc += *t.analytic;
        }
        row.analytic_ref = acc / n;
    }

    row.throughput_min = std::numeric_limits<double>::infinity();
    row.throughput_max = -std::numeric_limits<double>::infinity();
    double t_acc = 0.0;
    for (const auto& t : trials) {
        row.throughput_min = std::min(row.throughput_min, t.t_min);
        row.throughput_max = std::max(row.throughput_max, t.t_max);
        t_acc += t.t_sum;
    }
    row.throughput_mean = t_acc / (n * static_cast<double>(sc.n_users));
    return row;
}

} // namespace

std::vector<ResultRow> run_experiment(const std::vector<Scenario>& scenarios, unsigned threads)
{
    std::vector<Task> tasks;
    std::vector<std::size_t> offsets;
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
        scenarios[s].validate();
        offsets.push_back(tasks.size());
        for (std::uint64_t t = 0; t < scenarios[s].trials; ++t) {
            tasks.push_back({s, t});
        }
    }

    std::vector<TrialSummary> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = summarize(run_frames(scenarios[tasks[i].scenario], tasks[i].trial));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
    }

    // The first failing task in task order wins, whatever thread hit it first.
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    std::vector<ResultRow> rows;
    rows.reserve(scenarios.size());
    for (std::size_t s = 0; s < scenarios.size(); ++s) {
        const std::span<const TrialSummary> span(results.data() + offsets[s], scenarios[s].trials);
        rows.push_back(aggregate(scenarios[s], span));
    }
    return rows;
}

std::vector<ResultRow> run_experiment(const ScenarioSet& set, unsigned threads)
{
    return run_experiment(set.expand(), threads);
}

} // namespace irsobf
