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

#pragma once

#include <Eigen/Dense>

namespace doflab
{

// Mutual information log2 det(I + noise_cov^-1 * signal_cov) in bits for a
// Gaussian vector channel. signal_cov must be Hermitian PSD and noise_cov
// Hermitian PD; throws std::invalid_argument otherwise. Computed by whitening
// the noise with a Cholesky factor, which keeps the result basis-invariant.
double gaussian_mi(const Eigen::MatrixXcd &signal_cov, const Eigen::MatrixXcd &noise_cov);

} // namespace doflab
