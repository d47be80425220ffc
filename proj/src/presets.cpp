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

namespace irsobf {

namespace {

// Kept in sync with presets/*.conf (a unit test compares them).
constexpr std::string_view kFig1 = R"(# SPDX-License-Identifier: Apache-2.0
#
# irsobf - opportunistic beamforming through intelligent reflecting surfaces
# Copyright (C) 2026 The irsobf authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------
# Sum-rate versus number of users under slow fading (discrete-state model).
regime = slow
n_users = 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024
n_elements = 4, 8
strategy = stationary_random, coherent, imperfect_csi(0.2), quantized(2), off
scheduler = pf_inf
state_pool = 64
placement = uniform
frames = 100000
trials = 100
seed = 1
)";

constexpr std::string_view kFig2 = R"(# SPDX-License-Identifier: Apache-2.0
#
# irsobf - opportunistic beamforming through intelligent reflecting surfaces
# Copyright (C) 2026 The irsobf authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------
# Sum-rate versus correlation coefficient under fast correlated fading.
regime = fast
eta = 0, 0.2, 0.4, 0.6, 0.8, 1
n_users = 256
n_elements = 8, 32
strategy = uniform_random, eigen_deterministic, off
scheduler = os
placement = common
frames = 10000
trials = 20
seed = 1
)";

} // namespace

std::string_view preset_text(std::string_view name)
{
    if (name == "fig1") {
        return kFig1;
    }
    if (name == "fig2") {
        return kFig2;
    }
    throw ConfigError("preset", "unknown preset '" + std::string(name) + "' (expected fig1 or fig2)");
}

ScenarioSet load_preset(std::string_view name)
{
    return parse_scenario(preset_text(name));
}

} // namespace irsobf
