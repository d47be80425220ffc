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

#include "irsobf/numerics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace irsobf {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double tol)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument("HermitianMatrix: matrix must be square and non-empty");
    }
    if (!m.allFinite()) {
        throw std::invalid_argument("HermitianMatrix: matrix has non-finite entries");
    }
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol) {
        std::ostringstream msg;
        msg << "HermitianMatrix: |M - M^H| reaches " << asym << " (tolerance " << tol << ")";
        throw std::invalid_argument(msg.str());
    }
    m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index n)
{
    return HermitianMatrix(ComplexMatrix::Identity(n, n));
}

ComplexMatrix EigenDecomposition::reconstruct() const
{
    return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

EigenDecomposition hermitian_eig(const HermitianMatrix& m)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigen-solver did not converge");
    }

    EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
    for (Eigen::Index j = 0; j < out.eigenvectors.cols(); ++j) {
        auto col = out.eigenvectors.col(j);
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < col.size(); ++i) {
            // Strict comparison with a small margin keeps the first of (near) equal entries.
            const double a = std::abs(col(i));
            if (a > best * (1.0 + 1e-12)) {
                best = a;
                pivot = i;
            }
        }
        if (best > 0.0) {
            col *= std::conj(col(pivot)) / best;
            col(pivot) = cplx(best, 0.0);
        }
    }
    return out;
}

HermitianMatrix psd_sqrt(const HermitianMatrix& m)
{
    const EigenDecomposition eig = hermitian_eig(m);
    // Eigenvalues at round-off level relative to the largest are treated as exact
    // zeros; their square roots would otherwise inject O(1e-8) noise.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
    Eigen::VectorXd roots(eig.size());
    for (Eigen::Index j = 0; j < eig.size(); ++j) {
        const double lambda = eig.eigenvalues(j);
        if (lambda < -kPsdTol) {
            std::ostringstream msg;
            msg << "psd_sqrt: eigenvalue " << lambda << " is below -" << kPsdTol;
            throw std::domain_error(msg.str());
        }
        roots(j) = lambda > floor ? std::sqrt(lambda) : 0.0;
    }
    const ComplexMatrix s = eig.eigenvectors * roots.cast<cplx>().asDiagonal() * eig.eigenvectors.adjoint();
    // The product is Hermitian up to round-off; the constructor symmetrises it.
    return HermitianMatrix(s, 1e-9 * std::max(1.0, s.cwiseAbs().maxCoeff()));
}

cplx sample_complex_gaussian(Rng& rng)
{
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

ComplexVector sample_complex_gaussian(Rng& rng, Eigen::Index n)
{
    if (n < 1) {
        throw std::invalid_argument("sample_complex_gaussian: n must be >= 1");
    }
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    ComplexVector out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        out(i) = cplx(re, im);
    }
    return out;
}

double wrap_phase(double angle) noexcept
{
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2pi.
    if (r >= kTwoPi || r == 0.0) {
        r = 0.0;
    }
    return r;
}

double phase_of(cplx x) noexcept
{
    if (x.real() == 0.0 && x.imag() == 0.0) {
        return 0.0;
    }
    return wrap_phase(std::arg(x));
}

std::vector<double> phase_of(const ComplexVector& x)
{
    std::vector<double> out(static_cast<std::size_t>(x.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out[static_cast<std::size_t>(i)] = phase_of(x(i));
    }
    return out;
}

Rng make_stream(std::uint64_t seed, std::uint64_t trial, StreamTag tag, std::uint64_t index)
{
    auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
    auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
    std::seed_seq seq{lo(seed), hi(seed), lo(trial), hi(trial),
                      static_cast<std::uint32_t>(tag), lo(index), hi(index)};
    return Rng(seq);
}

} // namespace irsobf
