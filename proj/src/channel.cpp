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

#include "irsobf/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace irsobf {

double distance(const Point& a, const Point& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

double dbm_to_watts(double dbm) noexcept
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

ComplexVector los_bs_irs(Eigen::Index n_elements, double spacing_d, std::span<const double> los_angles)
{
    if (n_elements < 1) {
        throw std::invalid_argument("los_bs_irs: n_elements must be >= 1");
    }
    if (!(spacing_d > 0.0)) {
        throw std::invalid_argument("los_bs_irs: element spacing must be > 0");
    }
    const auto n = static_cast<std::size_t>(n_elements);
    if (los_angles.size() != 1 && los_angles.size() != n) {
        throw std::invalid_argument("los_bs_irs: need one shared angle or one angle per element");
    }
    ComplexVector h1(n_elements);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = los_angles.size() == 1 ? los_angles[0] : los_angles[i];
        const double phase = kTwoPi * static_cast<double>(i) * spacing_d * std::sin(angle);
        h1(static_cast<Eigen::Index>(i)) = std::polar(1.0, phase);
    }
    return h1;
}

ComplexVector los_bs_irs(Eigen::Index n_elements, double spacing_d, double los_angle)
{
    return los_bs_irs(n_elements, spacing_d, std::span<const double>(&los_angle, 1));
}

double los_angle_from_geometry(const Point& bs, const Point& irs)
{
    if (bs.x == irs.x && bs.y == irs.y) {
        throw std::invalid_argument("los_angle_from_geometry: BS and IRS share a position");
    }
    return std::atan2(irs.y - bs.y, irs.x - bs.x);
}

HermitianMatrix exp_correlation(Eigen::Index n_elements, double eta)
{
    if (n_elements < 1) {
        throw std::invalid_argument("exp_correlation: n_elements must be >= 1");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        std::ostringstream msg;
        msg << "exp_correlation: eta = " << eta << " is outside [0, 1]";
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix r(n_elements, n_elements);
    for (Eigen::Index i = 0; i < n_elements; ++i) {
        for (Eigen::Index j = 0; j < n_elements; ++j) {
            // std::pow(0, 0) == 1 keeps the diagonal at one for eta = 0.
            r(i, j) = std::pow(eta, static_cast<double>(std::abs(i - j)));
        }
    }
    return HermitianMatrix(r);
}

std::vector<PathLossFactors> path_loss(const Geometry& geometry, const PathLossParams& params)
{
    const double c0 = db_to_linear(params.reference_pl_db);
    const double gain = db_to_linear(params.element_gain_dbi);
    const double penetration = db_to_linear(-params.penetration_db);
    const auto& e = params.exponents;

    const double d_bs_irs = distance(geometry.bs, geometry.irs);
    if (!(d_bs_irs > 0.0)) {
        throw std::invalid_argument("path_loss: BS and IRS are co-located");
    }
    const double bs_irs = c0 * std::pow(d_bs_irs, -e.bs_irs);

    std::vector<PathLossFactors> out;
    out.reserve(geometry.users.size());
    for (std::size_t k = 0; k < geometry.users.size(); ++k) {
        const Point& u = geometry.users[k];
        const double d_irs = distance(geometry.irs, u);
        const double d_bs = distance(geometry.bs, u);
        if (!(d_irs > 0.0) || !(d_bs > 0.0)) {
            std::ostringstream msg;
            msg << "path_loss: user " << k << " is co-located with the " << (d_bs > 0.0 ? "IRS" : "BS");
            throw std::invalid_argument(msg.str());
        }
        PathLossFactors f;
        f.beta_r = gain * gain * bs_irs * c0 * std::pow(d_irs, -e.irs_user);
        f.beta_d = gain * c0 * std::pow(d_bs, -e.direct) * penetration;
        out.push_back(f);
    }
    return out;
}

RayleighProcess::RayleighProcess(std::size_t n_users, const HermitianMatrix& corr, FadingRegime regime)
    : n_users_(n_users), regime_(regime)
{
    const ComplexMatrix eye = ComplexMatrix::Identity(corr.size(), corr.size());
    identity_ = corr.matrix() == eye;
    sqrt_corr_ = identity_ ? eye : psd_sqrt(corr).matrix();
}

ComplexVector RayleighProcess::draw_h2(Rng& rng) const
{
    ComplexVector b = sample_complex_gaussian(rng, sqrt_corr_.rows());
    if (identity_) {
        return b;
    }
    return sqrt_corr_ * b;
}

UserChannels RayleighProcess::draw(Rng& rng) const
{
    UserChannels out;
    out.h2.reserve(n_users_);
    out.hd.reserve(n_users_);
    for (std::size_t k = 0; k < n_users_; ++k) {
        out.h2.push_back(draw_h2(rng));
        out.hd.push_back(sample_complex_gaussian(rng));
    }
    return out;
}

const UserChannels& RayleighProcess::next(Rng& rng)
{
    if (!current_ || regime_.kind == FadingKind::fast) {
        current_ = draw(rng);
    }
    return *current_;
}

UserChannels sample_user_channels(Rng& rng, std::size_t n_users, const HermitianMatrix& corr)
{
    return RayleighProcess(n_users, corr, FadingRegime{FadingKind::fast, 0.0}).draw(rng);
}

cplx effective_channel(const ComplexVector& h1, const PhaseVector& v, const ComplexVector& h2, cplx hd,
                       const PathLossFactors& pl)
{
    const auto n = h1.size();
    if (h2.size() != n || static_cast<Eigen::Index>(v.size()) != n) {
        std::ostringstream msg;
        msg << "effective_channel: dimension mismatch (h1 " << n << ", v " << v.size() << ", h2 " << h2.size()
            << ")";
        throw std::invalid_argument(msg.str());
    }
    const cplx cascaded = (v.weights().array() * h1.array() * h2.array()).sum();
    return std::sqrt(pl.beta_r) * cascaded + std::sqrt(pl.beta_d) * hd;
}

double snr(cplx h, double power_w, double noise_w) noexcept
{
    return power_w * std::norm(h) / noise_w;
}

double rate_of(double snr) noexcept
{
    return std::log2(1.0 + snr);
}

} // namespace irsobf
