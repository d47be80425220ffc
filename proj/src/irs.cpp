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

#include "irsobf/irs.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace irsobf {

PhaseVector coherent_phases(const ComplexVector& h1, const ComplexVector& h2, cplx hd, double alpha)
{
    if (h1.size() != h2.size() || h1.size() == 0) {
        throw std::invalid_argument("coherent_phases: h1 and h2 must be non-empty and of equal length");
    }
    const double target = phase_of(hd);
    std::vector<double> thetas(static_cast<std::size_t>(h1.size()));
    for (Eigen::Index n = 0; n < h1.size(); ++n) {
        thetas[static_cast<std::size_t>(n)] = target - phase_of(h1(n)) - phase_of(h2(n));
    }
    return PhaseVector(std::move(thetas), alpha);
}

std::size_t random_stationary_index(Rng& rng, std::size_t count)
{
    if (count == 0) {
        throw std::invalid_argument("random_stationary_phases: configuration list is empty");
    }
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    return pick(rng);
}

const PhaseVector& random_stationary_phases(Rng& rng, std::span<const PhaseVector> configs)
{
    return configs[random_stationary_index(rng, configs.size())];
}

PhaseVector uniform_random_phases(Rng& rng, std::size_t n, double alpha)
{
    if (n == 0) {
        throw std::invalid_argument("uniform_random_phases: n must be >= 1");
    }
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<double> thetas(n);
    for (auto& t : thetas) {
        t = angle(rng);
    }
    return PhaseVector(std::move(thetas), alpha);
}

PhaseVector deterministic_eigen_design(const HermitianMatrix& r_bar, double alpha)
{
    const EigenDecomposition eig = hermitian_eig(r_bar);
    const auto top = eig.eigenvectors.col(eig.size() - 1);
    std::vector<double> thetas(static_cast<std::size_t>(top.size()));
    for (Eigen::Index i = 0; i < top.size(); ++i) {
        thetas[static_cast<std::size_t>(i)] = -phase_of(top(i));
    }
    return PhaseVector(std::move(thetas), alpha);
}

PhaseVector quantize_phases(const PhaseVector& pv, int bits)
{
    if (bits < 1 || bits > 30) {
        std::ostringstream msg;
        msg << "quantize_phases: bits = " << bits << " is outside [1, 30]";
        throw std::invalid_argument(msg.str());
    }
    const auto levels = static_cast<std::uint64_t>(1) << bits;
    const double step = kTwoPi / static_cast<double>(levels);
    constexpr double tie_tol = 1e-12;

    std::vector<double> out(pv.size());
    for (std::size_t n = 0; n < pv.size(); ++n) {
        const double q = pv.thetas()[n] / step;
        const double lower = std::floor(q);
        const double frac = q - lower;
        auto lo = static_cast<std::uint64_t>(lower) % levels;
        auto hi = (lo + 1) % levels;
        std::uint64_t pick;
        if (frac < 0.5 - tie_tol) {
            pick = lo;
        } else if (frac > 0.5 + tie_tol) {
            pick = hi;
        } else {
            pick = std::min(lo, hi);
        }
        out[n] = static_cast<double>(pick) * step;
    }
    return PhaseVector(std::move(out), pv.alpha());
}

ComplexVector imperfect_estimate(Rng& rng, const ComplexVector& h2, const ImperfectCsiConfig& cfg)
{
    if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0)) {
        std::ostringstream msg;
        msg << "imperfect_csi: epsilon = " << cfg.epsilon << " is outside [0, 1]";
        throw std::invalid_argument(msg.str());
    }
    const ComplexVector delta = sample_complex_gaussian(rng, h2.size());
    return std::sqrt(1.0 - cfg.epsilon * cfg.epsilon) * h2 + cfg.epsilon * delta;
}

PhaseVector imperfect_csi_phases(Rng& rng, const ComplexVector& h1, const ComplexVector& h2, cplx hd,
                                 const ImperfectCsiConfig& cfg, double alpha)
{
    return coherent_phases(h1, imperfect_estimate(rng, h2, cfg), hd, alpha);
}

} // namespace irsobf
