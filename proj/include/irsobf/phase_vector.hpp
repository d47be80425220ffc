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

#ifndef IRSOBF_PHASE_VECTOR_HPP
#define IRSOBF_PHASE_VECTOR_HPP

#include <vector>

#include "irsobf/numerics.hpp"

namespace irsobf {

/// IRS control for one frame: N phase shifts in [0, 2pi) sharing one reflection
/// amplitude alpha. The reflection weights are v = alpha * exp(j*theta).
class PhaseVector {
public:
    PhaseVector() = default;

    /// Wraps every theta into [0, 2pi). Throws std::invalid_argument when alpha is
    /// outside [0, 1], thetas is empty, or any entry is not finite.
    PhaseVector(std::vector<double> thetas, double alpha);

    /// All phases zero with alpha = 0: the IRS contributes nothing.
    static PhaseVector off(std::size_t n);

    [[nodiscard]] const std::vector<double>& thetas() const noexcept { return thetas_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] std::size_t size() const noexcept { return thetas_.size(); }

    /// v = alpha * exp(j*theta), as it enters v^T diag(h1) h2.
    [[nodiscard]] const ComplexVector& weights() const noexcept { return weights_; }

    /// conj(v), the quantity used in quadratic forms v_bar^H R v_bar.
    [[nodiscard]] ComplexVector conj_weights() const { return weights_.conjugate(); }

    /// Entrywise circular distance of the phases is within tol and amplitudes agree.
    [[nodiscard]] bool matches(const PhaseVector& other, double tol = 1e-9) const noexcept;

private:
    std::vector<double> thetas_;
    double alpha_ = 0.0;
    ComplexVector weights_;
};

/// Shortest distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b) noexcept;

} // namespace irsobf

#endif
