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

#include "irsobf/scenario.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace irsobf {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string fmt_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view key, std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    const char* end = text.data() + text.size();
    auto res = std::from_chars(text.data(), end, v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(v)) {
        throw ConfigError(std::string(key), "invalid value for '" + std::string(key) + "': expected a number, got '" +
                                                std::string(text) + "'");
    }
    return v;
}

std::uint64_t parse_uint(std::string_view key, std::string_view text)
{
    text = trim(text);
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto res = std::from_chars(text.data(), end, v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != end) {
        throw ConfigError(std::string(key), "invalid value for '" + std::string(key) +
                                                "': expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
}

[[noreturn]] void out_of_range(std::string_view key, std::string_view value, std::string_view bounds)
{
    throw ConfigError(std::string(key), "value " + std::string(value) + " for '" + std::string(key) +
                                            "' is out of range, expected " + std::string(bounds));
}

double ranged_double(std::string_view key, std::string_view text, double lo, double hi, std::string_view bounds)
{
    const double v = parse_double(key, text);
    if (v < lo || v > hi) {
        out_of_range(key, trim(text), bounds);
    }
    return v;
}

std::uint64_t ranged_uint(std::string_view key, std::string_view text, std::uint64_t lo, std::uint64_t hi,
                          std::string_view bounds)
{
    const std::uint64_t v = parse_uint(key, text);
    if (v < lo || v > hi) {
        out_of_range(key, trim(text), bounds);
    }
    return v;
}

/// Splits on commas that are not inside parentheses.
std::vector<std::string_view> split_list(std::string_view text)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        } else if (text[i] == ',' && depth == 0) {
            out.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(text.substr(start)));
    return out;
}

/// "name(arg)" -> {name, arg}; plain "name" -> {name, nullopt}.
std::pair<std::string_view, std::optional<std::string_view>> split_call(std::string_view text)
{
    text = trim(text);
    const auto open = text.find('(');
    if (open == std::string_view::npos) {
        return {text, std::nullopt};
    }
    if (text.back() != ')') {
        return {text, std::nullopt};
    }
    return {trim(text.substr(0, open)), trim(text.substr(open + 1, text.size() - open - 2))};
}

std::string_view kind_name(StrategyKind k)
{
    switch (k) {
    case StrategyKind::off: return "off";
    case StrategyKind::coherent: return "coherent";
    case StrategyKind::stationary_random: return "stationary_random";
    case StrategyKind::uniform_random: return "uniform_random";
    case StrategyKind::eigen_deterministic: return "eigen_deterministic";
    case StrategyKind::imperfect_csi: return "imperfect_csi";
    }
    return "?";
}

std::string_view placement_name(Placement p)
{
    switch (p) {
    case Placement::uniform: return "uniform";
    case Placement::common: return "common";
    case Placement::fixed: return "fixed";
    }
    return "?";
}

std::string_view analytic_name(AnalyticKind a)
{
    switch (a) {
    case AnalyticKind::automatic: return "auto";
    case AnalyticKind::none: return "none";
    case AnalyticKind::limit: return "limit";
    case AnalyticKind::scaling_law: return "scaling_law";
    case AnalyticKind::exact_max: return "exact_max";
    }
    return "?";
}

template <typename T>
std::string join(const std::vector<T>& items, auto&& fmt)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += fmt(items[i]);
    }
    return out;
}

} // namespace

std::string Strategy::name() const
{
    std::string out;
    if (kind == StrategyKind::stationary_random && quant_bits > 0) {
        return "quantized(" + std::to_string(quant_bits) + ")";
    }
    out = kind_name(kind);
    if (kind == StrategyKind::imperfect_csi) {
        out += "(" + fmt_double(epsilon) + ")";
    }
    if (quant_bits > 0) {
        out += "/q" + std::to_string(quant_bits);
    }
    return out;
}

Strategy parse_strategy(std::string_view text)
{
    constexpr std::string_view key = "strategy";
    text = trim(text);
    Strategy s;
    if (const auto slash = text.rfind("/q"); slash != std::string_view::npos) {
        s.quant_bits = static_cast<int>(ranged_uint(key, text.substr(slash + 2), 1, 16, "[1, 16] bits"));
        text = trim(text.substr(0, slash));
    }
    const auto [name, arg] = split_call(text);
    if (name == "quantized") {
        if (!arg) {
            throw ConfigError(std::string(key), "strategy 'quantized' needs a bit count, e.g. quantized(2)");
        }
        s.kind = StrategyKind::stationary_random;
        s.quant_bits = static_cast<int>(ranged_uint(key, *arg, 1, 16, "[1, 16] bits"));
        return s;
    }
    if (name == "imperfect_csi") {
        s.kind = StrategyKind::imperfect_csi;
        if (arg) {
            s.epsilon = ranged_double(key, *arg, 0.0, 1.0, "[0, 1]");
        }
        return s;
    }
    if (arg) {
        throw ConfigError(std::string(key), "strategy '" + std::string(name) + "' takes no argument");
    }
    static const std::map<std::string_view, StrategyKind> kinds{
        {"off", StrategyKind::off},
        {"coherent", StrategyKind::coherent},
        {"stationary_random", StrategyKind::stationary_random},
        {"uniform_random", StrategyKind::uniform_random},
        {"eigen_deterministic", StrategyKind::eigen_deterministic},
    };
    const auto it = kinds.find(name);
    if (it == kinds.end()) {
        throw ConfigError(std::string(key),
                          "unknown strategy '" + std::string(text) +
                              "' (expected coherent, stationary_random, uniform_random, eigen_deterministic, "
                              "quantized(b), imperfect_csi(eps) or off)");
    }
    s.kind = it->second;
    return s;
}

std::string SchedulerSpec::name() const
{
    switch (kind) {
    case SchedulerKind::os: return "os";
    case SchedulerKind::pf: return "pf(" + fmt_double(window) + ")";
    case SchedulerKind::pf_inf: return "pf_inf";
    case SchedulerKind::genie: return "genie";
    }
    return "?";
}

SchedulerSpec parse_scheduler(std::string_view text)
{
    constexpr std::string_view key = "scheduler";
    const auto [name, arg] = split_call(text);
    SchedulerSpec s;
    if (name == "pf") {
        if (!arg) {
            throw ConfigError(std::string(key), "scheduler 'pf' needs a window, e.g. pf(100); use pf_inf for t_c = inf");
        }
        s.kind = SchedulerKind::pf;
        s.window = ranged_double(key, *arg, 1.0, 1e15, "[1, 1e15] frames");
        return s;
    }
    if (arg) {
        throw ConfigError(std::string(key), "scheduler '" + std::string(name) + "' takes no argument");
    }
    if (name == "os") {
        s.kind = SchedulerKind::os;
    } else if (name == "pf_inf") {
        s.kind = SchedulerKind::pf_inf;
    } else if (name == "genie") {
        s.kind = SchedulerKind::genie;
    } else {
        throw ConfigError(std::string(key),
                          "unknown scheduler '" + std::string(trim(text)) + "' (expected os, pf(t_c), pf_inf or genie)");
    }
    return s;
}

std::string Scenario::id() const
{
    std::ostringstream out;
    out << strategy.name() << '_' << scheduler.name() << "_K" << n_users << "_N" << n_elements << "_eta"
        << fmt_double(regime.correlation_eta);
    return out.str();
}

void Scenario::validate() const
{
    if (n_users < 1) {
        throw ConfigError("n_users", "n_users must be >= 1");
    }
    if (frames < 1) {
        throw ConfigError("frames", "frames must be >= 1");
    }
    if (trials < 1) {
        throw ConfigError("trials", "trials must be >= 1");
    }
    if (n_elements == 0 && strategy.kind != StrategyKind::off) {
        throw ConfigError("strategy", "n_elements = 0 (no IRS) only supports strategy = off, got " + strategy.name());
    }
    if (scheduler.kind == SchedulerKind::genie && strategy.kind != StrategyKind::stationary_random) {
        throw ConfigError("scheduler", "the genie scheduler needs strategy stationary_random or quantized(b), got " +
                                           strategy.name());
    }
    if (scheduler.kind == SchedulerKind::genie && regime.kind != FadingKind::slow) {
        throw ConfigError("scheduler", "the genie scheduler needs regime = slow");
    }
    if (strategy.kind == StrategyKind::stationary_random && state_pool == 0 && regime.kind == FadingKind::fast) {
        throw ConfigError("state_pool", "stationary_random under fast fading needs state_pool >= 1");
    }
    if (region.x_min > region.x_max || region.y_min > region.y_max) {
        throw ConfigError("x_min", "placement region is empty");
    }
}

std::uint64_t ScenarioSet::resolved_frames() const noexcept
{
    if (frames) {
        return *frames;
    }
    return base.regime.kind == FadingKind::slow ? kDefaultFramesSlow : kDefaultFramesFast;
}

std::vector<Scenario> ScenarioSet::expand() const
{
    std::vector<Scenario> out;
    for (std::size_t n : n_elements) {
        for (const Strategy& st : strategies) {
            for (const SchedulerSpec& sc : schedulers) {
                for (double eta : etas) {
                    for (std::size_t k : n_users) {
                        Scenario s = base;
                        s.n_elements = n;
                        s.strategy = st;
                        s.scheduler = sc;
                        s.regime.correlation_eta = eta;
                        s.n_users = k;
                        s.frames = resolved_frames();
                        s.validate();
                        out.push_back(std::move(s));
                    }
                }
            }
        }
    }
    return out;
}

namespace {

using Setter = std::function<void(ScenarioSet&, std::string_view key, std::string_view value)>;

const std::map<std::string, Setter, std::less<>>& setters()
{
    auto num = [](double Scenario::*field, double lo, double hi, const char* bounds) -> Setter {
        return [=](ScenarioSet& s, std::string_view k, std::string_view v) {
            s.base.*field = ranged_double(k, v, lo, hi, bounds);
        };
    };
    constexpr double inf = 1e300;
    static const std::map<std::string, Setter, std::less<>> table{
        {"n_users",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.n_users.clear();
             for (auto item : split_list(v)) {
                 s.n_users.push_back(ranged_uint(k, item, 1, 1u << 24, "[1, 16777216]"));
             }
         }},
        {"n_elements",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.n_elements.clear();
             for (auto item : split_list(v)) {
                 s.n_elements.push_back(ranged_uint(k, item, 0, 4096, "[0, 4096]"));
             }
         }},
        {"eta",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.etas.clear();
             for (auto item : split_list(v)) {
                 s.etas.push_back(ranged_double(k, item, 0.0, 1.0, "[0, 1]"));
             }
         }},
        {"strategy",
         [](ScenarioSet& s, std::string_view, std::string_view v) {
             s.strategies.clear();
             for (auto item : split_list(v)) {
                 s.strategies.push_back(parse_strategy(item));
             }
         }},
        {"scheduler",
         [](ScenarioSet& s, std::string_view, std::string_view v) {
             s.schedulers.clear();
             for (auto item : split_list(v)) {
                 s.schedulers.push_back(parse_scheduler(item));
             }
         }},
        {"quant_bits",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             const int bits = static_cast<int>(ranged_uint(k, v, 0, 16, "[0, 16]"));
             for (auto& st : s.strategies) {
                 st.quant_bits = bits;
             }
         }},
        {"epsilon",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             const double eps = ranged_double(k, v, 0.0, 1.0, "[0, 1]");
             for (auto& st : s.strategies) {
                 if (st.kind == StrategyKind::imperfect_csi) {
                     st.epsilon = eps;
                 }
             }
         }},
        {"pf_window",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             const double w = ranged_double(k, v, 1.0, 1e15, "[1, 1e15]");
             for (auto& sc : s.schedulers) {
                 if (sc.kind == SchedulerKind::pf) {
                     sc.window = w;
                 }
             }
         }},
        {"frames",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             const auto trimmed = trim(v);
             if (trimmed == "auto") {
                 s.frames.reset();
             } else {
                 s.frames = ranged_uint(k, v, 1, UINT64_MAX, ">= 1");
             }
         }},
        {"trials",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.trials = ranged_uint(k, v, 1, UINT64_MAX, ">= 1");
         }},
        {"seed", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.seed = parse_uint(k, v); }},
        {"frame_length",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.frame_length = ranged_uint(k, v, 1, UINT64_MAX, ">= 1");
         }},
        {"state_pool",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.state_pool = ranged_uint(k, v, 0, 1u << 20, "[0, 1048576]");
         }},
        {"regime",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             const auto t = trim(v);
             if (t == "slow") {
                 s.base.regime.kind = FadingKind::slow;
             } else if (t == "fast") {
                 s.base.regime.kind = FadingKind::fast;
             } else {
                 throw ConfigError(std::string(k), "invalid value for 'regime': expected slow or fast, got '" +
                                                       std::string(t) + "'");
             }
         }},
        {"placement",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             const auto t = trim(v);
             if (t == "uniform") {
                 s.base.placement = Placement::uniform;
             } else if (t == "common") {
                 s.base.placement = Placement::common;
             } else if (t == "fixed") {
                 s.base.placement = Placement::fixed;
             } else {
                 throw ConfigError(std::string(k), "invalid value for 'placement': expected uniform, common or "
                                                   "fixed, got '" + std::string(t) + "'");
             }
         }},
        {"analytic",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             static const std::map<std::string_view, AnalyticKind> kinds{
                 {"auto", AnalyticKind::automatic},      {"none", AnalyticKind::none},
                 {"limit", AnalyticKind::limit},         {"scaling_law", AnalyticKind::scaling_law},
                 {"exact_max", AnalyticKind::exact_max},
             };
             const auto it = kinds.find(trim(v));
             if (it == kinds.end()) {
                 throw ConfigError(std::string(k), "invalid value for 'analytic': expected auto, none, limit, "
                                                   "scaling_law or exact_max");
             }
             s.base.analytic = it->second;
         }},
        {"los_angle",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             if (trim(v) == "auto") {
                 s.base.los_angle.reset();
             } else {
                 s.base.los_angle = ranged_double(k, v, -kTwoPi, kTwoPi, "[-2pi, 2pi] radians");
             }
         }},
        {"power_w", num(&Scenario::power_w, 1e-300, inf, "(0, inf) W")},
        {"noise_dbm", num(&Scenario::noise_dbm, -400.0, 400.0, "[-400, 400] dBm")},
        {"alpha", num(&Scenario::alpha, 0.0, 1.0, "[0, 1]")},
        {"spacing_d", num(&Scenario::spacing_d, 1e-12, inf, "(0, inf) wavelengths")},
        {"bs_x", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.bs.x = parse_double(k, v); }},
        {"bs_y", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.bs.y = parse_double(k, v); }},
        {"irs_x", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.irs.x = parse_double(k, v); }},
        {"irs_y", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.irs.y = parse_double(k, v); }},
        {"user_x",
         [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.user_position.x = parse_double(k, v); }},
        {"user_y",
         [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.user_position.y = parse_double(k, v); }},
        {"x_min", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.region.x_min = parse_double(k, v); }},
        {"x_max", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.region.x_max = parse_double(k, v); }},
        {"y_min", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.region.y_min = parse_double(k, v); }},
        {"y_max", [](ScenarioSet& s, std::string_view k, std::string_view v) { s.base.region.y_max = parse_double(k, v); }},
        {"ple_bs_irs",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.path_loss.exponents.bs_irs = ranged_double(k, v, 0.0, 10.0, "[0, 10]");
         }},
        {"ple_irs_user",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.path_loss.exponents.irs_user = ranged_double(k, v, 0.0, 10.0, "[0, 10]");
         }},
        {"ple_direct",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.path_loss.exponents.direct = ranged_double(k, v, 0.0, 10.0, "[0, 10]");
         }},
        {"reference_pl_db",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.path_loss.reference_pl_db = ranged_double(k, v, -300.0, 300.0, "[-300, 300] dB");
         }},
        {"penetration_db",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.path_loss.penetration_db = ranged_double(k, v, -300.0, 300.0, "[-300, 300] dB");
         }},
        {"element_gain_dbi",
         [](ScenarioSet& s, std::string_view k, std::string_view v) {
             s.base.path_loss.element_gain_dbi = ranged_double(k, v, -300.0, 300.0, "[-300, 300] dBi");
         }},
    };
    return table;
}

} // namespace

void apply_setting(ScenarioSet& set, std::string_view key, std::string_view value)
{
    key = trim(key);
    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) {
        throw ConfigError(std::string(key), "unknown configuration key '" + std::string(key) + "'");
    }
    if (trim(value).empty()) {
        throw ConfigError(std::string(key), "missing value for '" + std::string(key) + "'");
    }
    it->second(set, key, value);
}

ScenarioSet parse_scenario(std::string_view text, ScenarioSet base)
{
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value', got '" +
                                      std::string(line) + "'");
        }
        apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    }
    // Surfaces cross-field problems (and the key responsible) at parse time.
    (void)base.expand();
    return base;
}

std::string ScenarioSet::echo() const
{
    const Scenario& b = base;
    std::ostringstream out;
    auto line = [&](std::string_view key, const std::string& value) { out << key << " = " << value << '\n'; };
    auto u = [](std::uint64_t v) { return std::to_string(v); };

    line("n_users", join(n_users, u));
    line("n_elements", join(n_elements, u));
    line("eta", join(etas, fmt_double));
    line("strategy", join(strategies, [](const Strategy& s) { return s.name(); }));
    line("scheduler", join(schedulers, [](const SchedulerSpec& s) { return s.name(); }));
    line("regime", b.regime.kind == FadingKind::slow ? "slow" : "fast");
    line("frames", u(resolved_frames()));
    line("trials", u(b.trials));
    line("seed", u(b.seed));
    line("frame_length", u(b.frame_length));
    line("state_pool", u(b.state_pool));
    line("placement", std::string(placement_name(b.placement)));
    line("user_x", fmt_double(b.user_position.x));
    line("user_y", fmt_double(b.user_position.y));
    line("x_min", fmt_double(b.region.x_min));
    line("x_max", fmt_double(b.region.x_max));
    line("y_min", fmt_double(b.region.y_min));
    line("y_max", fmt_double(b.region.y_max));
    line("bs_x", fmt_double(b.bs.x));
    line("bs_y", fmt_double(b.bs.y));
    line("irs_x", fmt_double(b.irs.x));
    line("irs_y", fmt_double(b.irs.y));
    line("power_w", fmt_double(b.power_w));
    line("noise_dbm", fmt_double(b.noise_dbm));
    line("alpha", fmt_double(b.alpha));
    line("spacing_d", fmt_double(b.spacing_d));
    line("los_angle", b.los_angle ? fmt_double(*b.los_angle) : std::string("auto"));
    line("ple_bs_irs", fmt_double(b.path_loss.exponents.bs_irs));
    line("ple_irs_user", fmt_double(b.path_loss.exponents.irs_user));
    line("ple_direct", fmt_double(b.path_loss.exponents.direct));
    line("reference_pl_db", fmt_double(b.path_loss.reference_pl_db));
    line("penetration_db", fmt_double(b.path_loss.penetration_db));
    line("element_gain_dbi", fmt_double(b.path_loss.element_gain_dbi));
    line("analytic", std::string(analytic_name(b.analytic)));
    return out.str();
}

} // namespace irsobf
