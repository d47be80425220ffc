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

#ifndef IRSOBF_SCENARIO_HPP
#define IRSOBF_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irsobf/channel.hpp"

namespace irsobf {

enum class StrategyKind { off, coherent, stationary_random, uniform_random, eigen_deterministic, imperfect_csi };

/// IRS phase-control strategy. `quant_bits > 0` quantizes whatever the strategy
/// produces; "quantized(b)" is shorthand for stationary_random with b bits.
struct Strategy {
    StrategyKind kind = StrategyKind::coherent;
    int quant_bits = 0;
    double epsilon = 0.0; // imperfect_csi only

    /// Canonical name, parseable by parse_strategy.
    [[nodiscard]] std::string name() const;
    friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// Accepts off, coherent, stationary_random, uniform_random, eigen_deterministic,
/// quantized(b), imperfect_csi(eps), optionally suffixed "/q<b>".
Strategy parse_strategy(std::string_view text);

enum class SchedulerKind { os, pf, pf_inf, genie };

struct SchedulerSpec {
    SchedulerKind kind = SchedulerKind::pf_inf;
    double window = 0.0; // pf only

    [[nodiscard]] std::string name() const;
    friend bool operator==(const SchedulerSpec&, const SchedulerSpec&) = default;
};

/// Accepts os, pf(t_c), pf_inf, genie.
SchedulerSpec parse_scheduler(std::string_view text);

/// uniform: every user drawn independently from the region, per trial.
/// common: one position per trial shared by all users (identical statistics).
/// fixed: all users at `user_position`.
enum class Placement { uniform, common, fixed };

enum class AnalyticKind { automatic, none, limit, scaling_law, exact_max };

struct Region {
    double x_min = -30.0;
    double x_max = 30.0;
    double y_min = 50.0;
    double y_max = 130.0;
};

/// One fully resolved experiment point.
struct Scenario {
    std::size_t n_users = 4;
    std::size_t n_elements = 4; // 0 means no IRS
    std::uint64_t frames = 100000;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;

    Point bs{0.0, 0.0};
    Point irs{0.0, 50.0};
    Region region;
    Placement placement = Placement::uniform;
    Point user_position{0.0, 90.0};

    FadingRegime regime;
    Strategy strategy;
    SchedulerSpec scheduler;

    double power_w = 1.0;
    double noise_dbm = -80.0;
    double alpha = 1.0;
    double spacing_d = 0.5;
    std::optional<double> los_angle; // radians; derived from geometry when empty
    PathLossParams path_loss;

    std::size_t state_pool = 64; // discrete slow-fading states; 0 = one per user
    std::uint64_t frame_length = 1; // symbols per frame, informational
    AnalyticKind analytic = AnalyticKind::automatic;

    [[nodiscard]] double noise_w() const noexcept { return dbm_to_watts(noise_dbm); }

    /// Stable identifier built from the swept fields.
    [[nodiscard]] std::string id() const;

    /// Throws ConfigError when a combination of fields is unusable.
    void validate() const;
};

/// Parse or validation failure. `key()` names the offending configuration key
/// (empty for whole-document problems).
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string key, const std::string& what) : std::invalid_argument(what), key_(std::move(key)) {}
    [[nodiscard]] const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// A scenario with list-valued sweep axes. Expansion order is
/// n_elements, strategy, scheduler, eta, n_users (last varies fastest).
struct ScenarioSet {
    Scenario base;
    std::vector<std::size_t> n_users{4};
    std::vector<std::size_t> n_elements{4};
    std::vector<double> etas{0.0};
    std::vector<Strategy> strategies{Strategy{}};
    std::vector<SchedulerSpec> schedulers{SchedulerSpec{}};
    std::optional<std::uint64_t> frames; // default depends on the fading regime

    [[nodiscard]] std::uint64_t resolved_frames() const noexcept;
    [[nodiscard]] std::vector<Scenario> expand() const;

    /// Every resolved parameter as "key = value" lines; parse_scenario of the
    /// echo reproduces the same set.
    [[nodiscard]] std::string echo() const;
};

inline constexpr std::uint64_t kDefaultFramesSlow = 100000;
inline constexpr std::uint64_t kDefaultFramesFast = 10000;

/// Parses "key = value" lines ('#' starts a comment) on top of `base`. Unknown
/// keys, malformed values and out-of-range values raise ConfigError.
ScenarioSet parse_scenario(std::string_view text, ScenarioSet base = {});

/// Applies one key/value pair; same rules as parse_scenario.
void apply_setting(ScenarioSet& set, std::string_view key, std::string_view value);

/// Built-in presets "fig1" and "fig2". Throws ConfigError for other names.
std::string_view preset_text(std::string_view name);
ScenarioSet load_preset(std::string_view name);

} // namespace irsobf

#endif
