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

#include "types.hpp"

#include <Eigen/Dense>

#include <cstdint>

namespace doflab
{

// One realization of the four links at a given power. The true channel is
// estimate + P^(-beta/2) * error, exactly; est/err entries are i.i.d.
// circularly-symmetric complex Gaussian with unit variance.
struct ChannelSet
{
    double power = 1.0;

    // Index [rx-1][tx-1]; each matrix is N_rx x M_tx.
    std::array<std::array<Eigen::MatrixXcd, 2>, 2> est;
    std::array<std::array<Eigen::MatrixXcd, 2>, 2> err;
    std::array<std::array<Eigen::MatrixXcd, 2>, 2> truth;

    const Eigen::MatrixXcd &estimate(int rx, int tx) const { return est[rx - 1][tx - 1]; }
    const Eigen::MatrixXcd &error(int rx, int tx) const { return err[rx - 1][tx - 1]; }
    const Eigen::MatrixXcd &actual(int rx, int tx) const { return truth[rx - 1][tx - 1]; }
};

// Draws a channel realization. Deterministic given the seed; the same seed
// yields the same est/err draws at every power, so sweeps share randomness
// across grid points.
ChannelSet sample_channels(const AntennaConfig &config, const CsitProfile &csit, double power, std::uint64_t seed);

// k orthonormal vectors spanning (part of) the kernel of `matrix`, from a
// rank-revealing SVD; singular values below 1e-10 times the largest count as
// zero. Throws when k exceeds the kernel dimension.
Eigen::MatrixXcd null_basis(const Eigen::MatrixXcd &matrix, int k);

// Unit-norm transmit vectors for every stream of the scheme, in stream
// order: each transmitter's generic streams get a Haar-random orthonormal
// frame drawn from `seed`; null-space streams get kernel vectors of the
// estimated cross channel, assigned in basis order.
std::vector<Eigen::VectorXcd> realize_precoders(const SchemeSpec &scheme, const ChannelSet &channels,
                                                std::uint64_t seed);

} // namespace doflab
