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

#ifndef IRSOBF_IRS_HPP
#define IRSOBF_IRS_HPP

#include <span>

#include "irsobf/numerics.hpp"
#include "irsobf/phase_vector.hpp"

namespace irsobf {

struct ImperfectCsiConfig {
    double epsilon = 0.0;
};

/// Phases that rotate every cascaded path h1_n * h2_n onto the phase of hd:
/// theta_n = angle(hd) - angle(h1_n) - angle(h2_n).
PhaseVector coherent_phases(const ComplexVector& h1, const ComplexVector& h2, cplx hd, double alpha = 1.0);

/// Index drawn uniformly from [0, count). Throws std::invalid_argument when count == 0.
std::size_t random_stationary_index(Rng& rng, std::size_t count);

/// One configuration picked uniformly from `configs`, returned verbatim.
const PhaseVector& random_stationary_phases(Rng& rng, std::span<const PhaseVector> configs);

/// theta_n i.i.d. uniform on [0, 2pi).
PhaseVector uniform_random_phases(Rng& rng, std::size_t n, double alpha);

/// Statistical design for correlated fading. With u_N the top eigenvector of
/// r_bar, the returned vector satisfies conj(v) = alpha * exp(j*angle(u_N)).
/// On a repeated top eigenvalue the last eigenvector in ascending order is used.
PhaseVector deterministic_eigen_design(const HermitianMatrix& r_bar, double alpha);

/// Nearest codeword of {2*pi*m / 2^bits} with wraparound; exact ties go to the
/// smaller codeword. bits must lie in [1, 30].
PhaseVector quantize_phases(const PhaseVector& pv, int bits);

/// sqrt(1 - eps^2) * h2 + eps * delta with delta ~ CN(0, I) drawn from rng.
ComplexVector imperfect_estimate(Rng& rng, const ComplexVector& h2, const ImperfectCsiConfig& cfg);

/// Coherent phases computed from an estimate of h2; hd is taken as known.
PhaseVector imperfect_csi_phases(Rng& rng, const ComplexVector& h1, const ComplexVector& h2, cplx hd,
                                 const ImperfectCsiConfig& cfg, double alpha = 1.0);

} // namespace irsobf

#endif
