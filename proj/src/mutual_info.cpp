// SPDX-License-Identifier: Apache-2.0
//
// dof-lab: achievable-DoF laboratory for the 2-user MIMO interference channel
// Copyright (C) 2026 dof-lab developers
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

#include "mutual_info.hpp"

#include <cmath>
#include <stdexcept>

namespace doflab
{

double gaussian_mi(const Eigen::MatrixXcd &signal_cov, const Eigen::MatrixXcd &noise_cov)
{
    const Eigen::Index n = noise_cov.rows();
    if (noise_cov.cols() != n || signal_cov.rows() != n || signal_cov.cols() != n)
        throw std::invalid_argument("gaussian_mi: covariance dimensions disagree");
    if (n == 0)
        return 0.0;

    Eigen::LLT<Eigen::MatrixXcd> noise_llt(noise_cov);
    if (noise_llt.info() != Eigen::Success)
        throw std::invalid_argument("gaussian_mi: noise covariance is not positive definite");

    // Whiten: W = L^-1 S L^-H, then log2 det(I + W) from a second Cholesky.
    const auto L = noise_llt.matrixL();
    Eigen::MatrixXcd w = L.solve(signal_cov);
    w = L.solve(w.adjoint()).adjoint();
    w = 0.5 * (w + w.adjoint()).eval(); // scrub asymmetry from roundoff

    Eigen::MatrixXcd eye_plus_w = Eigen::MatrixXcd::Identity(n, n) + w;
    Eigen::LLT<Eigen::MatrixXcd> mi_llt(eye_plus_w);
    if (mi_llt.info() == Eigen::Success)
    {
        const Eigen::MatrixXcd factor = mi_llt.matrixL();
        double bits = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            bits += 2.0 * std::log2(std::real(factor(i, i)));
        return bits;
    }

    // Cholesky gives up once cond(I + W) nears 1/eps (signal spans ~16
    // orders of magnitude over the noise). The spectrum of W still resolves
    // that case; roundoff dust below -1e-10 * ||W|| is scrubbed, anything
    // more negative is a genuinely indefinite input.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(w);
    if (eig.info() != Eigen::Success)
        throw std::invalid_argument("gaussian_mi: eigenvalue computation failed");
    const double scale = std::max(eig.eigenvalues().cwiseAbs().maxCoeff(), 1.0);
    double bits = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
    {
        const double lambda = eig.eigenvalues()(i);
        if (lambda < -1e-10 * scale)
            throw std::invalid_argument("gaussian_mi: signal covariance is not positive semidefinite");
        bits += std::log2(1.0 + std::max(lambda, 0.0));
    }
    return bits;
}

} // namespace doflab
