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

#ifndef IRSOBF_NUMERICS_HPP
#define IRSOBF_NUMERICS_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace irsobf {

using cplx = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Random engine used everywhere. Streams are never shared between trials.
using Rng = std::mt19937_64;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Elementwise tolerance for M == M^H.
inline constexpr double kHermitianTol = 1e-12;

/// Eigenvalues below this are treated as negative (not round-off) by psd_sqrt.
inline constexpr double kPsdTol = 1e-10;

/// Square complex matrix that has been checked to equal its conjugate transpose.
class HermitianMatrix {
public:
    HermitianMatrix() = default;

    /// Validates and stores `m`. The stored matrix is symmetrised as (M + M^H)/2 so
    /// round-off below the tolerance never leaks into the eigen-solver.
    /// Throws std::invalid_argument for non-square, non-finite or non-Hermitian input.
    explicit HermitianMatrix(const ComplexMatrix& m, double tol = kHermitianTol);

    static HermitianMatrix identity(Eigen::Index n);

    [[nodiscard]] const ComplexMatrix& matrix() const noexcept { return m_; }
    [[nodiscard]] Eigen::Index size() const noexcept { return m_.rows(); }
    [[nodiscard]] double trace() const { return m_.trace().real(); }

private:
    ComplexMatrix m_;
};

/// Ascending eigenvalues with orthonormal eigenvectors stored as matrix columns.
///
/// Each eigenvector is rotated so that its largest-magnitude entry is real and
/// positive (first such entry on exact ties); this pins the otherwise free phase.
struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;
    ComplexMatrix eigenvectors;

    [[nodiscard]] Eigen::Index size() const noexcept { return eigenvalues.size(); }
    [[nodiscard]] ComplexMatrix reconstruct() const;
};

EigenDecomposition hermitian_eig(const HermitianMatrix& m);

/// Hermitian PSD square root S with S*S = M. Eigenvalues in [-1e-10, 0) are
/// clamped to zero; anything more negative throws std::domain_error.
HermitianMatrix psd_sqrt(const HermitianMatrix& m);

/// n i.i.d. CN(0, 1) draws (real and imaginary parts each of variance 1/2).
ComplexVector sample_complex_gaussian(Rng& rng, Eigen::Index n);

/// Single CN(0, 1) draw.
cplx sample_complex_gaussian(Rng& rng);

/// Maps any real angle into [0, 2pi).
double wrap_phase(double angle) noexcept;

/// Principal argument in [0, 2pi); the argument of an exact zero is 0.
double phase_of(cplx x) noexcept;
std::vector<double> phase_of(const ComplexVector& x);

/// Purpose tags for independent random streams inside one trial.
enum class StreamTag : std::uint32_t {
    placement = 1,
    user_state = 2,
    state_pool = 3,
    irs = 4,
    csi_error = 5,
    frames = 6,
    scratch = 7,
};

/// Derives an independent engine from (master seed, trial, tag, index). The same
/// arguments always give the same engine, whatever thread asks for it.
Rng make_stream(std::uint64_t seed, std::uint64_t trial, StreamTag tag, std::uint64_t index = 0);

} // namespace irsobf

#endif
