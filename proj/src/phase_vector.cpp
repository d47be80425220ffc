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

#include "irsobf/phase_vector.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace irsobf {

PhaseVector::PhaseVector(std::vector<double> thetas, double alpha) : thetas_(std::move(thetas)), alpha_(alpha)
{
    if (thetas_.empty()) {
        throw std::invalid_argument("PhaseVector: needs at least one element");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::ostringstream msg;
        msg << "PhaseVector: alpha = " << alpha << " is outside [0, 1]";
        throw std::invalid_argument(msg.str());
    }
    weights_.resize(static_cast<Eigen::Index>(thetas_.size()));
    for (std::size_t n = 0; n < thetas_.size(); ++n) {
        if (!std::isfinite(thetas_[n])) {
            throw std::invalid_argument("PhaseVector: non-finite phase");
        }
        thetas_[n] = wrap_phase(thetas_[n]);
        weights_(static_cast<Eigen::Index>(n)) = std::polar(alpha_, thetas_[n]);
    }
}

PhaseVector PhaseVector::off(std::size_t n)
{
    return PhaseVector(std::vector<double>(n, 0.0), 0.0);
}

bool PhaseVector::matches(const PhaseVector& other, double tol) const noexcept
{
    if (other.size() != size() || std::abs(other.alpha_ - alpha_) > tol) {
        return false;
    }
    for (std::size_t n = 0; n < thetas_.size(); ++n) {
        if (circular_distance(thetas_[n], other.thetas_[n]) > tol) {
            return false;
        }
    }
    return true;
}

double circular_distance(double a, double b) noexcept
{
    const double d = std::abs(wrap_phase(a) - wrap_phase(b));
    return std::min(d, kTwoPi - d);
}

} // namespace irsobf
