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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "irsobf/experiment.hpp"
#include "irsobf/scaling.hpp"
#include "irsobf/scenario.hpp"
#include "irsobf/simulate.hpp"

using namespace irsobf;

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::vector<std::string> lines(std::string text)
{
    if (!text.empty() && text.back() == '\n') {
        text.pop_back();
    }
    return split(text, '\n');
}

Scenario small_slow(std::size_t K, StrategyKind kind, SchedulerKind sched = SchedulerKind::pf_inf)
{
    Scenario s;
    s.n_users = K;
    s.n_elements = 4;
    s.frames = 2000;
    s.trials = 3;
    s.strategy.kind = kind;
    s.scheduler.kind = sched;
    return s;
}

std::string config_error_key(const std::string& text)
{
    try {
        (void)parse_scenario(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<no error>";
}

std::string config_error_message(const std::string& text)
{
    try {
        (void)parse_scenario(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("parse_scenario: minimal config fills the documented defaults")
{
    const ScenarioSet set = parse_scenario("n_users = 4\nn_elements = 4\nstrategy = coherent\n");
    const auto scenarios = set.expand();
    REQUIRE(scenarios.size() == 1);
    const Scenario& s = scenarios[0];
    CHECK(s.n_users == 4);
    CHECK(s.n_elements == 4);
    CHECK(s.strategy.kind == StrategyKind::coherent);
    CHECK(s.power_w == 1.0);
    CHECK(s.noise_dbm == -80.0);
    CHECK(s.alpha == 1.0);
    CHECK(s.spacing_d == 0.5);
    CHECK(s.path_loss.reference_pl_db == -30.0);
    CHECK(s.path_loss.exponents.bs_irs == 2.2);
    CHECK(s.path_loss.exponents.irs_user == 2.8);
    CHECK(s.path_loss.exponents.direct == 3.5);
    CHECK(s.path_loss.penetration_db == 10.0);
    CHECK(s.path_loss.element_gain_dbi == 5.0);
    CHECK(s.bs.x == 0.0);
    CHECK(s.irs.y == 50.0);
    CHECK(s.regime.kind == FadingKind::slow);
    CHECK(s.frames == kDefaultFramesSlow);
    CHECK(s.scheduler.kind == SchedulerKind::pf_inf);
    const std::string echo = set.echo();
    for (const char* key : {"power_w = 1", "noise_dbm = -80", "alpha = 1", "reference_pl_db = -30",
                            "frames = 100000", "state_pool = 64", "seed = 1"}) {
        CHECK(echo.find(key) != std::string::npos);
    }
}

TEST_CASE("parse_scenario: fast regime defaults to fewer frames")
{
    CHECK(parse_scenario("regime = fast\n").resolved_frames() == kDefaultFramesFast);
    CHECK(parse_scenario("regime = fast\nframes = 77\n").resolved_frames() == 77);
}

TEST_CASE("parse_scenario: out-of-range alpha names the key and the bounds")
{
    CHECK(config_error_key("alpha = 1.5\n") == "alpha");
    CHECK(config_error_message("alpha = 1.5\n").find("[0, 1]") != std::string::npos);
}

TEST_CASE("parse_scenario: unknown keys, malformed values and bad combinations")
{
    CHECK(config_error_key("n_usres = 4\n") == "n_usres");
    CHECK(config_error_key("n_users = four\n") == "n_users");
    CHECK(config_error_key("n_users = 0\n") == "n_users");
    CHECK(config_error_key("trials = 0\n") == "trials");
    CHECK(config_error_key("frames = 0\n") == "frames");
    CHECK(config_error_key("eta = 1.2\n") == "eta");
    CHECK(config_error_key("strategy = magic\n") == "strategy");
    CHECK(config_error_key("scheduler = pf\n") == "scheduler");
    CHECK(config_error_key("regime = medium\n") == "regime");
    CHECK(config_error_key("n_elements = 0\nstrategy = coherent\n") == "strategy");
    CHECK(config_error_key("strategy = coherent\nscheduler = genie\n") == "scheduler");
    CHECK(config_error_key("alpha =\n") == "alpha");
    CHECK(config_error_key("just some words\n") == "");
}

TEST_CASE("parse_scenario: strategy and scheduler names round-trip")
{
    for (const char* name : {"off", "coherent", "stationary_random", "uniform_random", "eigen_deterministic",
                             "quantized(2)", "imperfect_csi(0.2)", "coherent/q3"}) {
        CHECK(parse_strategy(name).name() == name);
    }
    CHECK(parse_strategy("quantized(2)").kind == StrategyKind::stationary_random);
    CHECK(parse_strategy("quantized(2)").quant_bits == 2);
    CHECK(parse_strategy("imperfect_csi(0.25)").epsilon == 0.25);
    for (const char* name : {"os", "pf(100)", "pf_inf", "genie"}) {
        CHECK(parse_scheduler(name).name() == name);
    }
    CHECK(parse_scheduler("pf(100)").window == 100.0);
}

TEST_CASE("parse_scenario: comments, lists and sweep expansion order")
{
    const ScenarioSet set = parse_scenario(R"(# comment line
n_users = 1, 2   # trailing comment
n_elements = 4, 8
strategy = coherent, imperfect_csi(0.2)
)");
    const auto all = set.expand();
    REQUIRE(all.size() == 8);
    CHECK(all[0].n_users == 1);
    CHECK(all[1].n_users == 2);
    CHECK(all[0].strategy.kind == StrategyKind::coherent);
    CHECK(all[2].strategy.kind == StrategyKind::imperfect_csi);
    CHECK(all[4].n_elements == 8);
    CHECK(all[0].id() == "coherent_pf_inf_K1_N4_eta0");
}

TEST_CASE("parse_scenario: the echo reproduces the same configuration")
{
    const ScenarioSet set = parse_scenario(R"(n_users = 3, 9
eta = 0.25
regime = fast
strategy = uniform_random/q2, eigen_deterministic
scheduler = os, pf(12.5)
los_angle = 0.3
placement = common
noise_dbm = -90.5
)");
    const std::string echo = set.echo();
    CHECK(parse_scenario(echo).echo() == echo);
}

TEST_CASE("presets: fig1 and fig2 sweeps")
{
    const ScenarioSet fig1 = load_preset("fig1");
    CHECK(fig1.n_users == std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024});
    CHECK(fig1.n_elements == std::vector<std::size_t>{4, 8});
    CHECK(fig1.base.regime.kind == FadingKind::slow);
    CHECK(fig1.strategies.size() == 5);
    CHECK(fig1.expand().size() == 11 * 2 * 5);

    const ScenarioSet fig2 = load_preset("fig2");
    CHECK(fig2.etas == std::vector<double>{0, 0.2, 0.4, 0.6, 0.8, 1});
    CHECK(fig2.n_users == std::vector<std::size_t>{256});
    CHECK(fig2.n_elements == std::vector<std::size_t>{8, 32});
    CHECK(fig2.base.regime.kind == FadingKind::fast);
    CHECK_THROWS_AS(load_preset("fig3"), ConfigError);
}

TEST_CASE("presets: shipped files match the built-in text")
{
    for (const char* name : {"fig1", "fig2"}) {
        std::ifstream in(std::string(IRSOBF_SOURCE_DIR) + "/presets/" + name + ".conf");
        REQUIRE(in);
        std::stringstream text;
        text << in.rdbuf();
        CHECK(text.str() == preset_text(name));
    }
}

TEST_CASE("run_frames: single user without IRS under slow fading is the direct-link rate every frame")
{
    Scenario s = small_slow(1, StrategyKind::off);
    s.n_elements = 0;
    RunOptions opt;
    opt.keep_trace = true;
    // |hd|^2 = snr / (P beta_d / sigma^2) must be a unit-mean exponential draw.
    double mean_gain = 0.0;
    double mean_sq = 0.0;
    constexpr int kTrials = 4000;
    for (int t = 0; t < kTrials; ++t) {
        s.frames = t == 0 ? 200 : 1;
        const TrialResult r = run_frames(s, static_cast<std::uint64_t>(t), opt);
        const double snr0 = r.trace[0].snrs[0];
        const double gain = snr0 / (s.power_w * r.pl[0].beta_d / s.noise_w());
        mean_gain += gain;
        mean_sq += gain * gain;
        for (const auto& f : r.trace) {
            CHECK(f.scheduled_user == std::optional<std::size_t>(0));
            CHECK(f.snrs[0] == snr0);
            CHECK(f.rate == std::log2(1.0 + snr0));
        }
        if (t == 0) {
            CHECK(r.sum_rate == doctest::Approx(std::log2(1.0 + snr0)).epsilon(1e-12));
        }
    }
    mean_gain /= kTrials;
    mean_sq /= kTrials;
    CHECK(mean_gain == doctest::Approx(1.0).epsilon(0.06));
    CHECK(mean_sq == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("run_frames: coherent strategy with one user matches the closed-form rate")
{
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        const Scenario s = small_slow(1, StrategyKind::coherent);
        const TrialResult r = run_frames(s, trial);
        REQUIRE(r.bf_rates.size() == 1);
        CHECK(std::abs(r.sum_rate - r.bf_rates[0]) < 1e-10);
    }
}

TEST_CASE("run_frames: opportunistic scheduling without IRS under slow fading never changes user")
{
    RunOptions opt;
    opt.keep_trace = true;
    const TrialResult r = run_frames(small_slow(16, StrategyKind::off, SchedulerKind::os), 0, opt);
    for (const auto& f : r.trace) {
        CHECK(f.scheduled_user == r.trace[0].scheduled_user);
        CHECK(f.rate == r.trace[0].rate);
    }
    CHECK(r.sum_rate == doctest::Approx(r.trace[0].rate).epsilon(1e-12));
}

TEST_CASE("run_frames: infinite-window throughputs sum to the sum-rate")
{
    for (auto kind : {StrategyKind::stationary_random, StrategyKind::coherent, StrategyKind::off}) {
        const TrialResult r = run_frames(small_slow(12, kind), 1);
        double total = 0.0;
        for (double t : r.throughputs) {
            total += t;
        }
        CHECK(total == doctest::Approx(r.sum_rate).epsilon(1e-12));
    }
}

TEST_CASE("run_frames: trace rates are log2(1 + snr) of the scheduled user")
{
    RunOptions opt;
    opt.keep_trace = true;
    Scenario s = small_slow(6, StrategyKind::uniform_random, SchedulerKind::pf);
    s.regime.kind = FadingKind::fast;
    s.regime.correlation_eta = 0.5;
    s.scheduler.window = 50.0;
    s.frames = 300;
    const TrialResult r = run_frames(s, 2, opt);
    REQUIRE(r.trace.size() == 300);
    double total = 0.0;
    for (const auto& f : r.trace) {
        REQUIRE(f.scheduled_user);
        CHECK(f.rate == std::log2(1.0 + f.snrs[*f.scheduled_user]));
        total += f.rate;
    }
    CHECK(total / 300.0 == doctest::Approx(r.sum_rate).epsilon(1e-12));
    // Fast fading: successive frames see different channels.
    CHECK(r.trace[0].snrs != r.trace[1].snrs);
}

TEST_CASE("run_frames: users are nested across K and results are repeatable")
{
    const TrialResult small = run_frames(small_slow(4, StrategyKind::coherent), 3);
    const TrialResult big = run_frames(small_slow(9, StrategyKind::coherent), 3);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(small.positions[k].x == big.positions[k].x);
        CHECK(small.positions[k].y == big.positions[k].y);
        CHECK(small.bf_rates[k] == big.bf_rates[k]);
    }
    const TrialResult again = run_frames(small_slow(9, StrategyKind::coherent), 3);
    CHECK(again.sum_rate == big.sum_rate);
    CHECK(again.throughputs == big.throughputs);
}

TEST_CASE("run_frames: placement rules")
{
    Scenario s = small_slow(5, StrategyKind::off);
    for (const auto& p : place_users(s, 0)) {
        CHECK(p.x >= -30.0);
        CHECK(p.x <= 30.0);
        CHECK(p.y >= 50.0);
        CHECK(p.y <= 130.0);
    }
    s.placement = Placement::common;
    const auto common = place_users(s, 0);
    for (const auto& p : common) {
        CHECK(p.x == common[0].x);
    }
    s.placement = Placement::fixed;
    s.user_position = Point{3.0, 77.0};
    for (const auto& p : place_users(s, 4)) {
        CHECK(p.x == 3.0);
        CHECK(p.y == 77.0);
    }
}

TEST_CASE("run_frames: genie baseline serves only matching users and stays below PF")
{
    Scenario genie = small_slow(8, StrategyKind::stationary_random, SchedulerKind::genie);
    genie.frames = 5000;
    Scenario pf = genie;
    pf.scheduler.kind = SchedulerKind::pf_inf;
    double g = 0.0;
    double p = 0.0;
    for (std::uint64_t t = 0; t < 10; ++t) {
        const TrialResult rg = run_frames(genie, t);
        CHECK(rg.idle_frames > 0);
        g += rg.sum_rate;
        p += run_frames(pf, t).sum_rate;
    }
    CHECK(g < p);
}

TEST_CASE("run_frames: analytic references")
{
    const TrialResult lim = run_frames(small_slow(5, StrategyKind::stationary_random), 0);
    REQUIRE(lim.analytic);
    CHECK(*lim.analytic == doctest::Approx(asymptotic_limit(lim.bf_rates)));
    CHECK_FALSE(run_frames(small_slow(5, StrategyKind::off), 0).analytic.has_value());

    Scenario fast = small_slow(16, StrategyKind::uniform_random, SchedulerKind::os);
    fast.regime.kind = FadingKind::fast;
    fast.placement = Placement::fixed;
    fast.frames = 10;
    const TrialResult r = run_frames(fast, 0);
    REQUIRE(r.analytic);
    const LinkBudget lb{1.0, fast.noise_w(), 1.0, r.pl[0].beta_r, r.pl[0].beta_d};
    CHECK(*r.analytic == doctest::Approx(scaling_law(16.0, 4.0, lb)).epsilon(1e-12));
    fast.analytic = AnalyticKind::exact_max;
    const TrialResult x = run_frames(fast, 0);
    CHECK(*x.analytic == doctest::Approx(exact_max_expectation(16, lb.snr_scale() * (lb.beta_r * 4 + lb.beta_d))));
}

TEST_CASE("run_experiment: one trial, one frame, one user reports that frame's rate")
{
    Scenario s = small_slow(1, StrategyKind::coherent);
    s.trials = 1;
    s.frames = 1;
    const auto rows = run_experiment(std::vector<Scenario>{s}, 1);
    REQUIRE(rows.size() == 1);
    RunOptions opt;
    opt.keep_trace = true;
    const TrialResult r = run_frames(s, 0, opt);
    CHECK(rows[0].sum_rate == r.trace[0].rate);
    CHECK(rows[0].stderr_ == 0.0);
}

TEST_CASE("run_experiment: mean and standard error over trials; thread count does not matter")
{
    const ScenarioSet set = parse_scenario("n_users = 2, 6\nstrategy = stationary_random, off\nframes = 500\ntrials = 5\n");
    const auto seq = run_experiment(set, 1);
    const auto par = run_experiment(set, 4);
    REQUIRE(seq.size() == 4);
    CHECK(emit_results(seq, OutputFormat::csv) == emit_results(par, OutputFormat::csv));
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].trial_sum_rates == par[i].trial_sum_rates);
    }

    const auto scenarios = set.expand();
    double mean = 0.0;
    std::vector<double> xs;
    for (std::uint64_t t = 0; t < 5; ++t) {
        xs.push_back(run_frames(scenarios[1], t).sum_rate);
        mean += xs.back();
    }
    mean /= 5;
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    CHECK(seq[1].sum_rate == doctest::Approx(mean).epsilon(1e-14));
    CHECK(seq[1].stderr_ == doctest::Approx(std::sqrt(ss / 4) / std::sqrt(5.0)).epsilon(1e-12));
    CHECK(seq[1].throughput_min <= seq[1].throughput_mean);
    CHECK(seq[1].throughput_mean <= seq[1].throughput_max);
}

TEST_CASE("emit_results: header plus one line per row; CSV parses back")
{
    const ScenarioSet set = parse_scenario("n_users = 3\nstrategy = coherent, off\nframes = 200\ntrials = 2\nseed = 17\n");
    const auto rows = run_experiment(set, 1);
    const auto one = emit_results(std::vector<ResultRow>{rows[0]}, OutputFormat::csv);
    const auto one_lines = lines(one);
    REQUIRE(one_lines.size() == 2);
    CHECK(one_lines[0] == "scenario_id,K,N,strategy,scheduler,eta,sum_rate,stderr,analytic_ref,seed");

    const auto all = lines(emit_results(rows, OutputFormat::csv));
    REQUIRE(all.size() == 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto f = split(all[i + 1], ',');
        REQUIRE(f.size() == 10);
        CHECK(f[0] == rows[i].scenario_id);
        CHECK(std::stoul(f[1]) == rows[i].n_users);
        CHECK(std::stoul(f[2]) == rows[i].n_elements);
        CHECK(f[3] == rows[i].strategy);
        CHECK(f[4] == rows[i].scheduler);
        CHECK(std::stod(f[5]) == rows[i].eta);
        CHECK(std::abs(std::stod(f[6]) - rows[i].sum_rate) <= 5e-6 * std::abs(rows[i].sum_rate));
        CHECK(std::abs(std::stod(f[7]) - rows[i].stderr_) <= 5e-6 * std::abs(rows[i].stderr_));
        if (rows[i].analytic_ref) {
            CHECK(std::abs(std::stod(f[8]) - *rows[i].analytic_ref) <= 5e-6 * std::abs(*rows[i].analytic_ref));
        } else {
            CHECK(f[8].empty());
        }
        CHECK(f[9] == "17");
    }
    CHECK_THROWS_AS(emit_results(std::vector<ResultRow>{}, OutputFormat::csv), std::invalid_argument);
}

TEST_CASE("emit_results: json lines carry the CSV header keys")
{
    const auto rows = run_experiment(parse_scenario("n_users = 2\nstrategy = coherent, off\nframes = 100\ntrials = 1\n"), 1);
    const auto text = lines(emit_results(rows, OutputFormat::jsonl));
    REQUIRE(text.size() == 2);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto j = nlohmann::json::parse(text[i]);
        std::vector<std::string> keys;
        for (auto it = j.begin(); it != j.end(); ++it) {
            keys.push_back(it.key());
        }
        // nlohmann::json sorts keys; compare as sets.
        std::vector<std::string> expected(std::begin(kResultColumns), std::end(kResultColumns));
        std::sort(keys.begin(), keys.end());
        std::sort(expected.begin(), expected.end());
        CHECK(keys == expected);
        CHECK(std::abs(j["sum_rate"].get<double>() - rows[i].sum_rate) <= 5e-6 * rows[i].sum_rate);
    }
    CHECK(nlohmann::json::parse(text[1])["analytic_ref"].is_null());
    // Key order in the text follows the CSV header.
    CHECK(text[0].rfind("{\"scenario_id\":", 0) == 0);
}
