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

#include "irsobf/scaling.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace irsobf {

double coherent_rate(const ComplexVector& h1, const ComplexVector& h2, cplx hd, const LinkBudget& lb)
{
    if (h1.size() != h2.size()) {
        throw std::invalid_argument("coherent_rate: h1 and h2 differ in length");
    }
    const double aligned = (h1.cwiseAbs().array() * h2.cwiseAbs().array()).sum();
    const double amplitude = lb.alpha * std::sqrt(lb.beta_r) * aligned + std::sqrt(lb.beta_d) * std::abs(hd);
    return std::log2(1.0 + lb.snr_scale() * amplitude * amplitude);
}

double asymptotic_limit(std::span<const double> per_user_bf_rates)
{
    if (per_user_bf_rates.empty()) {
        throw std::invalid_argument("asymptotic_limit: no users");
    }
    return std::accumulate(per_user_bf_rates.begin(), per_user_bf_rates.end(), 0.0) /
           static_cast<double>(per_user_bf_rates.size());
}

HermitianMatrix r_bar(const ComplexVector& h1, const HermitianMatrix& corr)
{
    if (h1.size() != corr.size()) {
        throw std::invalid_argument("r_bar: h1 length differs from the correlation matrix size");
    }
    if ((h1.cwiseAbs().array() - 1.0).abs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("r_bar: h1 entries must have unit modulus");
    }
    const ComplexMatrix m = h1.asDiagonal() * corr.matrix() * h1.conjugate().asDiagonal();
    return HermitianMatrix(m, 1e-9);
}

ZetaDecomposition zeta(const HermitianMatrix& r_bar)
{
    const EigenDecomposition eig = hermitian_eig(r_bar);
    const Eigen::Index n = eig.size();
    const ComplexVector top = eig.eigenvectors.col(n - 1);

    ComplexVector w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        w(i) = std::polar(1.0, phase_of(top(i)));
    }

    ZetaDecomposition out;
    out.eigenvalues = eig.eigenvalues;
    out.top_eigenvector = top;
    out.alignment_terms.resize(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
        const cplx proj = w.dot(eig.eigenvectors.col(j)); // w^H u_j
        out.alignment_terms[static_cast<std::size_t>(j)] = eig.eigenvalues(j) * std::norm(proj);
    }
    const double l1 = top.cwiseAbs().sum();
    out.alignment_terms[static_cast<std::size_t>(n - 1)] = eig.eigenvalues(n - 1) * l1 * l1;

    out.zeta = std::accumulate(out.alignment_terms.begin(), out.alignment_terms.end(), 0.0);
    return out;
}

double scaling_law(double n_users, double zeta_val, const LinkBudget& lb)
{
    if (!(n_users >= 2.0)) {
        std::ostringstream msg;
        msg << "scaling_law: K = " << n_users << " must be >= 2";
        throw std::invalid_argument(msg.str());
    }
    const double mean = lb.beta_r * lb.alpha * lb.alpha * zeta_val + lb.beta_d;
    return std::log2(1.0 + lb.snr_scale() * mean * std::log(n_users));
}

double evt_growth(const PhaseVector& v, const HermitianMatrix& r_bar, const LinkBudget& lb, double n_users)
{
    if (!(n_users > 1.0)) {
        throw std::invalid_argument("evt_growth: K must exceed 1");
    }
    if (static_cast<Eigen::Index>(v.size()) != r_bar.size()) {
        throw std::invalid_argument("evt_growth: phase vector length differs from R_bar size");
    }
    const ComplexVector vb = v.conj_weights();
    const double quad = vb.dot(r_bar.matrix() * vb).real();
    return lb.snr_scale() * (lb.beta_r * quad + lb.beta_d) * std::log(n_users);
}

double evt_condition(double mean_snr)
{
    if (!(mean_snr > 0.0)) {
        std::ostringstream msg;
        msg << "evt_condition: tail ratio " << mean_snr << " is not positive";
        throw std::invalid_argument(msg.str());
    }
    return mean_snr;
}

double exponential_tail_ratio(double x, double mean_snr)
{
    const double survival = std::exp(-x / mean_snr);
    const double density = survival / mean_snr;
    return survival / density;
}

double exact_max_expectation(std::size_t n_users, double mean_snr)
{
    if (n_users == 0) {
        throw std::invalid_argument("exact_max_expectation: K must be >= 1");
    }
    if (!(mean_snr > 0.0)) {
        throw std::invalid_argument("exact_max_expectation: mean SNR must be > 0");
    }
    const double k = static_cast<double>(n_users);

    // E[log2(1 + M)] = int_0^inf P(M > x) / ((1 + x) ln 2) dx, with x = mean * y.
    auto integrand = [&](double y) {
        if (y <= 0.0) {
            return mean_snr;
        }
        const double survival = -std::expm1(k * std::log1p(-std::exp(-y)));
        return mean_snr * survival / (1.0 + mean_snr * y);
    };

    // The survival function drops from ~1 to ~0 around y = ln K; splitting there
    // keeps the adaptive refinement local.
    const double split = std::log(k) + 1.0;
    using gk = boost::math::quadrature::gauss_kronrod<double, 61>;
    double err_head = 0.0;
    double err_tail = 0.0;
    const double head = gk::integrate(integrand, 0.0, split, 20, 1e-12, &err_head);
    const double tail = gk::integrate(integrand, split, std::numeric_limits<double>::infinity(), 20, 1e-12, &err_tail);
    const double total = head + tail;
    if (!(err_head + err_tail <= 1e-8 * std::abs(total))) {
        std::ostringstream msg;
        msg << "exact_max_expectation: quadrature error " << (err_head + err_tail) << " exceeds tolerance for K = "
            << n_users << ", mean = " << mean_snr;
        throw std::runtime_error(msg.str());
    }
    return total / std::numbers::ln2;
}

} // namespace irsobf
