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

#ifndef IRSOBF_CHANNEL_HPP
#define IRSOBF_CHANNEL_HPP

#include <optional>
#include <span>
#include <vector>

#include "irsobf/numerics.hpp"
#include "irsobf/phase_vector.hpp"

namespace irsobf {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point& a, const Point& b) noexcept;

struct Geometry {
    Point bs{0.0, 0.0};
    Point irs{0.0, 50.0};
    std::vector<Point> users;
};

struct PathLossExponents {
    double bs_irs = 2.2;
    double irs_user = 2.8;
    double direct = 3.5;
};

/// Log-distance path loss with intercept `reference_pl_db` at 1 m. The element
/// gain is applied at the BS and at the IRS, so the cascaded link collects it
/// twice and the direct link once.
struct PathLossParams {
    PathLossExponents exponents;
    double reference_pl_db = -30.0;
    double penetration_db = 10.0;
    double element_gain_dbi = 5.0;
};

/// Linear power gains of the cascaded (beta_r) and direct (beta_d) links.
struct PathLossFactors {
    double beta_r = 0.0;
    double beta_d = 0.0;
};

enum class FadingKind { slow, fast };

struct FadingRegime {
    FadingKind kind = FadingKind::slow;
    double correlation_eta = 0.0;
};

/// Small-scale fading of every user: IRS-user vectors h2 and direct gains hd.
struct UserChannels {
    std::vector<ComplexVector> h2;
    std::vector<cplx> hd;
};

/// All coefficients of one frame.
struct ChannelRealization {
    ComplexVector h1;
    UserChannels users;
    std::vector<PathLossFactors> pl;

    [[nodiscard]] std::size_t n_users() const noexcept { return users.hd.size(); }
    [[nodiscard]] Eigen::Index n_elements() const noexcept { return h1.size(); }
};

double db_to_linear(double db) noexcept;
double dbm_to_watts(double dbm) noexcept;

/// BS-IRS line-of-sight vector, entry n = exp(j*2pi*n*d*sin(angle_n)) for n = 0..N-1.
/// `los_angles` holds one angle per element, or a single angle shared by all.
ComplexVector los_bs_irs(Eigen::Index n_elements, double spacing_d, std::span<const double> los_angles);
ComplexVector los_bs_irs(Eigen::Index n_elements, double spacing_d, double los_angle);

/// Angle between the BS->IRS direction and the x axis (the IRS array broadside).
double los_angle_from_geometry(const Point& bs, const Point& irs);

/// [R]_ij = eta^|i-j|. Throws std::invalid_argument for eta outside [0, 1].
HermitianMatrix exp_correlation(Eigen::Index n_elements, double eta);

/// Per-user path-loss factors. Throws std::invalid_argument on zero distances.
std::vector<PathLossFactors> path_loss(const Geometry& geometry, const PathLossParams& params);

/// Draws h2_k ~ CN(0, R) and hd_k ~ CN(0, 1) for every user.
///
/// The square root of R is computed once at construction. The regime decides
/// whether `next` redraws (fast) or returns the first draw forever (slow).
class RayleighProcess {
public:
    RayleighProcess(std::size_t n_users, const HermitianMatrix& corr, FadingRegime regime);

    /// One independent draw, ignoring the regime.
    [[nodiscard]] UserChannels draw(Rng& rng) const;

    /// Channels for the next frame under the configured regime.
    const UserChannels& next(Rng& rng);

    /// Single-user draw of the correlated IRS-user vector.
    [[nodiscard]] ComplexVector draw_h2(Rng& rng) const;

    [[nodiscard]] const ComplexMatrix& sqrt_corr() const noexcept { return sqrt_corr_; }

private:
    std::size_t n_users_;
    ComplexMatrix sqrt_corr_;
    bool identity_;
    FadingRegime regime_;
    std::optional<UserChannels> current_;
};

/// One-shot draw (h2 per user, hd per user).
UserChannels sample_user_channels(Rng& rng, std::size_t n_users, const HermitianMatrix& corr);

/// sqrt(beta_r) * v^T diag(h1) h2 + sqrt(beta_d) * hd.
/// Throws std::invalid_argument when the lengths of h1, v and h2 differ.
cplx effective_channel(const ComplexVector& h1, const PhaseVector& v, const ComplexVector& h2, cplx hd,
                       const PathLossFactors& pl);

/// P |h|^2 / sigma^2.
double snr(cplx h, double power_w, double noise_w) noexcept;

/// log2(1 + snr) in bps/Hz.
double rate_of(double snr) noexcept;

} // namespace irsobf

#endif
