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

#ifndef IRSOBF_SCALING_HPP
#define IRSOBF_SCALING_HPP

#include <span>
#include <vector>

#include "irsobf/numerics.hpp"
#include "irsobf/phase_vector.hpp"

namespace irsobf {

/// Transmit power, noise power, IRS amplitude and the two link gains of one user.
struct LinkBudget {
    double power_w = 1.0;
    double noise_w = 1.0;
    double alpha = 1.0;
    double beta_r = 0.0;
    double beta_d = 0.0;

    [[nodiscard]] double snr_scale() const noexcept { return power_w / noise_w; }
};

/// Effective array gain of the eigenvector design and its parts.
struct ZetaDecomposition {
    double zeta = 0.0;
    Eigen::VectorXd eigenvalues;           // ascending
    std::vector<double> alignment_terms;   // lambda_j |w^H u_j|^2, j = 1..N
    ComplexVector top_eigenvector;         // u_N after the phase convention
};

/// Rate of one user under coherent beamforming:
/// log2(1 + P/sigma^2 * (alpha sqrt(beta_r) sum |h1_n||h2_n| + sqrt(beta_d) |hd|)^2).
double coherent_rate(const ComplexVector& h1, const ComplexVector& h2, cplx hd, const LinkBudget& lb);

/// Mean of the per-user coherent rates, the large-K limit of the sum-rate under
/// random-stationary phases and infinite-window PF.
double asymptotic_limit(std::span<const double> per_user_bf_rates);

/// diag(h1) R diag(h1)^H. Requires |h1_n| = 1 (checked to 1e-9).
HermitianMatrix r_bar(const ComplexVector& h1, const HermitianMatrix& corr);

/// zeta = sum_{j<N} lambda_j |(e^{j angle u_N})^H u_j|^2 + lambda_N (sum_i |u_N(i)|)^2.
ZetaDecomposition zeta(const HermitianMatrix& r_bar);

/// log2(1 + P/sigma^2 (beta_r alpha^2 zeta + beta_d) ln K). Throws std::invalid_argument for K < 2.
double scaling_law(double n_users, double zeta_val, const LinkBudget& lb);

/// Growth point l_K of the maximum of K exponential SNRs with mean
/// P/sigma^2 (beta_r v_bar^H R_bar v_bar + beta_d): F(l_K) = 1 - 1/K.
/// The amplitude is taken from `v`; lb.alpha is ignored.
double evt_growth(const PhaseVector& v, const HermitianMatrix& r_bar, const LinkBudget& lb, double n_users);

/// The tail ratio (1 - F)/f of an exponential law is its mean; returns it after
/// checking it is positive (std::invalid_argument otherwise).
double evt_condition(double mean_snr);

/// (1 - F(x)) / f(x) for the exponential law with the given mean, evaluated directly.
double exponential_tail_ratio(double x, double mean_snr);

/// E[log2(1 + max of K i.i.d. Exp(mean))] by adaptive quadrature of the
/// order-statistic survival function, relative error 1e-8.
/// Throws std::runtime_error when the quadrature error estimate misses that target.
double exact_max_expectation(std::size_t n_users, double mean_snr);

} // namespace irsobf

#endif
