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

#include "channel.hpp"

#include "rng.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace doflab
{

ChannelSet sample_channels(const AntennaConfig &config, const CsitProfile &csit, double power, std::uint64_t seed)
{
    auto [cfg, prof] = validate(config, csit);
    if (!(power > 1.0))
        throw std::invalid_argument("power must exceed 1");

    ChannelSet set;
    set.power = power;
    auto rng = make_rng(seed);

    const int tx_antennas[2] = {cfg.m1, cfg.m2};
    const int rx_antennas[2] = {cfg.n1, cfg.n2};
    const double beta[2][2] = {{prof.beta11, prof.beta12}, {prof.beta21, prof.beta22}};

    // Fixed draw order (rx-major), so a seed pins every matrix.
    for (int rx = 0; rx < 2; ++rx)
        for (int tx = 0; tx < 2; ++tx)
        {
            set.est[rx][tx] = gaussian_matrix(rng, rx_antennas[rx], tx_antennas[tx]);
            set.err[rx][tx] = gaussian_matrix(rng, rx_antennas[rx], tx_antennas[tx]);
            const double scale = std::pow(power, -0.5 * beta[rx][tx]);
            set.truth[rx][tx] = set.est[rx][tx] + scale * set.err[rx][tx];
        }
    return set;
}

Eigen::MatrixXcd null_basis(const Eigen::MatrixXcd &matrix, int k)
{
    const Eigen::Index cols = matrix.cols();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix, Eigen::ComputeFullV);

    const auto &sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? 1e-10 * sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff)
            ++rank;

    const Eigen::Index kernel_dim = cols - rank;
    if (k < 0 || k > kernel_dim)
        throw std::invalid_argument("null_basis: requested vectors exceed the kernel dimension");

    return svd.matrixV().rightCols(kernel_dim).leftCols(k);
}

std::vector<Eigen::VectorXcd> realize_precoders(const SchemeSpec &scheme, const ChannelSet &channels,
                                                std::uint64_t seed)
{
    const int tx_antennas[2] = {scheme.config.m1, scheme.config.m2};
    auto rng = make_rng(derive_seed(seed, 0));

    // Null-space groups share one kernel basis per (owner, avoided receiver),
    // handed out in basis order across the owner's null streams. Generic
    // streams of one transmitter form a Haar-random orthonormal frame; a
    // non-orthogonal set would throw away log-det volume at finite SNR
    // without changing anything asymptotic.
    Eigen::MatrixXcd null_bases[2], generic_frames[2];
    int next_null_col[2] = {0, 0}, next_generic_col[2] = {0, 0};
    for (int owner = 1; owner <= 2; ++owner)
    {
        int null_needed = 0, generic_needed = 0;
        for (const StreamSpec &s : scheme.streams)
            if (s.owner == owner)
                (s.precoder == PrecoderKind::NullOfCross ? null_needed : generic_needed)++;

        if (generic_needed > 0)
        {
            const int dim = tx_antennas[owner - 1];
            const Eigen::MatrixXcd draw = gaussian_matrix(rng, dim, generic_needed);
            Eigen::HouseholderQR<Eigen::MatrixXcd> qr(draw);
            generic_frames[owner - 1] =
                (qr.householderQ() * Eigen::MatrixXcd::Identity(dim, generic_needed)).eval();
        }
        if (null_needed > 0)
        {
            const int rx = owner == 1 ? 2 : 1;
            null_bases[owner - 1] = null_basis(channels.estimate(rx, owner), null_needed);
        }
    }

    std::vector<Eigen::VectorXcd> precoders;
    precoders.reserve(scheme.streams.size());
    for (const StreamSpec &s : scheme.streams)
    {
        if (s.precoder == PrecoderKind::Generic)
        {
            auto &col = next_generic_col[s.owner - 1];
            precoders.push_back(generic_frames[s.owner - 1].col(col++));
        }
        else
        {
            auto &col = next_null_col[s.owner - 1];
            precoders.push_back(null_bases[s.owner - 1].col(col++));
        }
    }
    return precoders;
}

} // namespace doflab
