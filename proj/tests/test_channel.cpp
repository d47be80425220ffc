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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "irsobf/channel.hpp"

using namespace irsobf;
using std::numbers::pi;

TEST_CASE("los_bs_irs: single element is one; zero angle is all ones; unit modulus")
{
    CHECK(los_bs_irs(1, 0.37, 1.1)(0) == cplx(1.0, 0.0));
    const ComplexVector ones = los_bs_irs(7, 0.5, 0.0);
    for (Eigen::Index n = 0; n < 7; ++n) {
        CHECK(std::abs(ones(n) - cplx(1.0, 0.0)) < 1e-15);
    }
    for (double angle : {0.1, 0.7, 2.0, -1.3}) {
        const ComplexVector h1 = los_bs_irs(16, 0.5, angle);
        for (Eigen::Index n = 0; n < 16; ++n) {
            CHECK(std::abs(std::abs(h1(n)) - 1.0) < 1e-15);
        }
    }
}

TEST_CASE("los_bs_irs: d = 0.5 and angle pi/6 gives quarter-turn steps")
{
    const ComplexVector h1 = los_bs_irs(4, 0.5, pi / 6);
    const cplx expected[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int n = 0; n < 4; ++n) {
        CHECK(std::abs(h1(n) - expected[n]) < 1e-12);
    }
}

TEST_CASE("los_bs_irs: per-element angles follow exp(j 2 pi n d sin(angle_n))")
{
    const std::vector<double> angles{0.3, -0.2, 1.0, 0.55, 2.5};
    const double d = 0.42;
    const ComplexVector h1 = los_bs_irs(5, d, angles);
    for (int n = 0; n < 5; ++n) {
        const double ph = 2.0 * pi * n * d * std::sin(angles[static_cast<std::size_t>(n)]);
        CHECK(std::abs(h1(n) - cplx(std::cos(ph), std::sin(ph))) < 1e-12);
    }
    CHECK_THROWS_AS(los_bs_irs(5, d, std::vector<double>{0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(los_bs_irs(0, d, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(los_bs_irs(3, 0.0, 0.1), std::invalid_argument);
}

TEST_CASE("los_angle_from_geometry: default layout is broadside to the x axis")
{
    CHECK(los_angle_from_geometry(Point{0, 0}, Point{0, 50}) == doctest::Approx(pi / 2));
    // sin = 1 at d = 0.5 gives alternating signs.
    const ComplexVector h1 = los_bs_irs(4, 0.5, los_angle_from_geometry(Point{0, 0}, Point{0, 50}));
    CHECK(std::abs(h1(1) - cplx(-1, 0)) < 1e-12);
    CHECK(std::abs(h1(2) - cplx(1, 0)) < 1e-12);
    CHECK_THROWS_AS(los_angle_from_geometry(Point{1, 1}, Point{1, 1}), std::invalid_argument);
}

TEST_CASE("exp_correlation: special cases, Toeplitz values and PSD")
{
    CHECK((exp_correlation(4, 0.0).matrix() - ComplexMatrix::Identity(4, 4)).norm() == 0.0);
    const HermitianMatrix ones = exp_correlation(5, 1.0);
    CHECK((ones.matrix() - ComplexMatrix::Ones(5, 5)).norm() == 0.0);
    const auto eig = hermitian_eig(ones);
    CHECK(eig.eigenvalues(4) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(std::abs(eig.eigenvalues(3)) < 1e-12);

    const ComplexMatrix r = exp_correlation(3, 0.5).matrix();
    const double expected[3][3] = {{1, .5, .25}, {.5, 1, .5}, {.25, .5, 1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(r(i, j) == cplx(expected[i][j], 0.0));
        }
    }
    for (double eta : {0.0, 0.3, 0.8, 0.99, 1.0}) {
        const HermitianMatrix m = exp_correlation(12, eta);
        CHECK(m.trace() == 12.0);
        CHECK(hermitian_eig(m).eigenvalues.minCoeff() > -1e-10);
    }
    CHECK_THROWS_AS(exp_correlation(3, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(exp_correlation(3, 1.1), std::invalid_argument);
}

TEST_CASE("path_loss: reference distance with no extras gives the intercept")
{
    PathLossParams p;
    p.exponents.direct = 3.5;
    p.penetration_db = 0.0;
    p.element_gain_dbi = 0.0;
    p.reference_pl_db = -30.0;
    Geometry g{Point{0, 0}, Point{0, 50}, {Point{1, 0}}};
    const auto pl = path_loss(g, p);
    CHECK(pl[0].beta_d == doctest::Approx(1e-3).epsilon(1e-12));
}

TEST_CASE("path_loss: doubling a distance with exponent 2 divides by 4")
{
    PathLossParams p;
    p.exponents = {2.0, 2.0, 2.0};
    Geometry g{Point{0, 0}, Point{0, 10}, {Point{0, 20}, Point{0, 30}}};
    const auto pl = path_loss(g, p);
    // IRS-user distances 10 and 20; BS-user distances 20 and 30.
    CHECK(pl[0].beta_r / pl[1].beta_r == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(pl[0].beta_d / pl[1].beta_d == doctest::Approx(9.0 / 4.0).epsilon(1e-12));
}

TEST_CASE("path_loss: default layout, user at (0,130), hand-evaluated")
{
    Geometry g{Point{0, 0}, Point{0, 50}, {Point{0, 130}}};
    const auto pl = path_loss(g, PathLossParams{});
    // Cascaded: 10 dB of element gain, -30 dB at 1 m on both hops, 50 m and 80 m.
    const double beta_r = 10.0 * (1e-3 * std::pow(50.0, -2.2)) * (1e-3 * std::pow(80.0, -2.8));
    // Direct: 5 dB of gain, 10 dB penetration, 130 m.
    const double beta_d = std::sqrt(10.0) * 1e-3 * std::pow(130.0, -3.5) * 0.1;
    CHECK(pl[0].beta_r == doctest::Approx(beta_r).epsilon(1e-12));
    CHECK(pl[0].beta_d == doctest::Approx(beta_d).epsilon(1e-12));
}

TEST_CASE("path_loss: zero distance is rejected")
{
    Geometry g{Point{0, 0}, Point{0, 50}, {Point{0, 50}}};
    CHECK_THROWS_AS(path_loss(g, PathLossParams{}), std::invalid_argument);
    Geometry h{Point{0, 0}, Point{0, 50}, {Point{0, 0}}};
    CHECK_THROWS_AS(path_loss(h, PathLossParams{}), std::invalid_argument);
}

TEST_CASE("sample_user_channels: identity correlation gives unit-variance entries")
{
    Rng rng(99);
    const std::size_t draws = 100000;
    const auto ch = sample_user_channels(rng, draws, HermitianMatrix::identity(2));
    double p0 = 0.0;
    double p1 = 0.0;
    double pd = 0.0;
    for (std::size_t k = 0; k < draws; ++k) {
        p0 += std::norm(ch.h2[k](0));
        p1 += std::norm(ch.h2[k](1));
        pd += std::norm(ch.hd[k]);
    }
    CHECK(p0 / draws == doctest::Approx(1.0).epsilon(0.02));
    CHECK(p1 / draws == doctest::Approx(1.0).epsilon(0.02));
    CHECK(pd / draws == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("sample_user_channels: fully correlated entries are equal per draw")
{
    Rng rng(3);
    const auto ch = sample_user_channels(rng, 50, exp_correlation(6, 1.0));
    for (const auto& h2 : ch.h2) {
        for (Eigen::Index n = 1; n < 6; ++n) {
            CHECK(std::abs(h2(n) - h2(0)) < 1e-12);
        }
    }
}

TEST_CASE("sample_user_channels: sample covariance matches the correlation matrix")
{
    Rng rng(17);
    const Eigen::Index n = 4;
    const HermitianMatrix corr = exp_correlation(n, 0.7);
    const std::size_t draws = 100000;
    const auto ch = sample_user_channels(rng, draws, corr);
    ComplexMatrix cov = ComplexMatrix::Zero(n, n);
    for (const auto& h2 : ch.h2) {
        cov += h2 * h2.adjoint();
    }
    cov /= static_cast<double>(draws);
    CHECK((cov - corr.matrix()).cwiseAbs().maxCoeff() < 0.05);
}

TEST_CASE("RayleighProcess: slow regime freezes, fast regime redraws")
{
    const HermitianMatrix corr = exp_correlation(3, 0.4);
    Rng rng(1);
    RayleighProcess slow(4, corr, FadingRegime{FadingKind::slow, 0.4});
    const UserChannels first = slow.next(rng);
    for (int f = 0; f < 5; ++f) {
        const UserChannels& again = slow.next(rng);
        CHECK(again.hd == first.hd);
        CHECK(again.h2[2] == first.h2[2]);
    }
    RayleighProcess fast(4, corr, FadingRegime{FadingKind::fast, 0.4});
    const UserChannels a = fast.next(rng);
    const UserChannels b = fast.next(rng);
    CHECK(a.hd[0] != b.hd[0]);
}

TEST_CASE("effective_channel: IRS off leaves the direct path")
{
    Rng rng(8);
    const ComplexVector h1 = los_bs_irs(4, 0.5, 0.3);
    const ComplexVector h2 = sample_complex_gaussian(rng, 4);
    const cplx hd(0.3, -0.7);
    const PathLossFactors pl{2.5e-9, 4e-7};
    CHECK(effective_channel(h1, PhaseVector::off(4), h2, hd, pl) == std::sqrt(pl.beta_d) * hd);
}

TEST_CASE("effective_channel: unit scalar case sums to two")
{
    ComplexVector one(1);
    one << cplx(1, 0);
    const cplx h = effective_channel(one, PhaseVector({0.0}, 1.0), one, cplx(1, 0), PathLossFactors{1, 1});
    CHECK(h == cplx(2.0, 0.0));
}

TEST_CASE("effective_channel: matrix form with a diagonal reflection matrix agrees")
{
    Rng rng(12);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    for (int rep = 0; rep < 50; ++rep) {
        const Eigen::Index n = 1 + rep % 9;
        const ComplexVector h1 = los_bs_irs(n, 0.5, u(rng));
        const ComplexVector h2 = sample_complex_gaussian(rng, n);
        const cplx hd = sample_complex_gaussian(rng);
        std::vector<double> th(static_cast<std::size_t>(n));
        for (auto& t : th) {
            t = u(rng);
        }
        const PhaseVector v(th, 0.8);
        const PathLossFactors pl{3e-10, 2e-8};
        ComplexMatrix theta = ComplexMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            theta(i, i) = std::polar(0.8, th[static_cast<std::size_t>(i)]);
        }
        const cplx dense = std::sqrt(pl.beta_r) * (h1.transpose() * theta * h2)(0, 0) + std::sqrt(pl.beta_d) * hd;
        const cplx h = effective_channel(h1, v, h2, hd, pl);
        CHECK(std::abs(h - dense) < 1e-12 * std::max(1.0, std::abs(dense)));
    }
}

TEST_CASE("effective_channel: linear in h2 and hd")
{
    Rng rng(21);
    const ComplexVector h1 = los_bs_irs(5, 0.5, 0.9);
    const PhaseVector v({0.1, 1.2, 2.3, 3.4, 4.5}, 1.0);
    const ComplexVector a = sample_complex_gaussian(rng, 5);
    const ComplexVector b = sample_complex_gaussian(rng, 5);
    const PathLossFactors pl{0.3, 0.7};
    const cplx s(0.4, -1.1);
    const cplx lhs = effective_channel(h1, v, a + s * b, cplx(1, 0) + s * cplx(0, 2), pl);
    const cplx rhs = effective_channel(h1, v, a, cplx(1, 0), pl) + s * effective_channel(h1, v, b, cplx(0, 2), pl);
    CHECK(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("effective_channel: dimension mismatch is rejected")
{
    const ComplexVector h1 = los_bs_irs(4, 0.5, 0.3);
    CHECK_THROWS_AS(effective_channel(h1, PhaseVector::off(3), ComplexVector::Ones(4), cplx(1, 0), PathLossFactors{1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(effective_channel(h1, PhaseVector::off(4), ComplexVector::Ones(5), cplx(1, 0), PathLossFactors{1, 1}),
                    std::invalid_argument);
}

TEST_CASE("snr and rate")
{
    CHECK(snr(cplx(0, 0), 1.0, 1.0) == 0.0);
    CHECK(snr(cplx(0, 1), 2.0, 2.0) == doctest::Approx(1.0));
    CHECK(rate_of(1.0) == doctest::Approx(1.0));
    // 1 W over -80 dBm (1e-11 W) with |h|^2 = 1e-8.
    CHECK(dbm_to_watts(-80.0) == doctest::Approx(1e-11).epsilon(1e-12));
    CHECK(snr(cplx(1e-4, 0), 1.0, dbm_to_watts(-80.0)) == doctest::Approx(1e3).epsilon(1e-10));
}
