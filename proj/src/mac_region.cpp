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

#include "mac_region.hpp"

#include "mutual_info.hpp"
#include "rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace doflab
{

namespace
{

void check_instance(const MacInstance &inst)
{
    if (inst.transmitters < 1 || inst.antennas < 1)
        throw std::invalid_argument("mac instance needs at least one transmitter and one antenna");
    if ((int)inst.noise_exps.size() != inst.antennas)
        throw std::invalid_argument("noise_exps size must equal the antenna count");
    if ((int)inst.dof_loads.size() != inst.transmitters)
        throw std::invalid_argument("dof_loads size must equal the transmitter count");
    for (double a : inst.noise_exps)
        if (!(a >= 0.0 && a <= 1.0))
            throw std::invalid_argument("noise exponents must lie in [0,1]");
    for (double d : inst.dof_loads)
        if (!(d >= 0.0))
            throw std::invalid_argument("dof loads must be nonnegative");
}

// min(|U|, M) - sum of the min(|U|, M) smallest alphas, for |U| = count.
double subset_budget(int count, int antennas, const std::vector<double> &alpha_sorted)
{
    const int dims = std::min(count, antennas);
    double budget = dims;
    for (int j = 0; j < dims; ++j)
        budget -= alpha_sorted[j];
    return budget;
}

} // namespace

MacCheck mac_region_contains(const MacInstance &instance)
{
    check_instance(instance);

    std::vector<double> d_sorted = instance.dof_loads;
    std::sort(d_sorted.begin(), d_sorted.end(), std::greater<>());
    std::vector<double> a_sorted = instance.noise_exps;
    std::sort(a_sorted.begin(), a_sorted.end());

    MacCheck out;
    out.contained = true;
    out.slack.resize(instance.transmitters);

    double top_d_sum = 0.0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= instance.transmitters; ++k)
    {
        top_d_sum += d_sorted[k - 1];
        const double slack = subset_budget(k, instance.antennas, a_sorted) - top_d_sum;
        out.slack[k - 1] = slack;
        if (slack < min_slack)
        {
            min_slack = slack;
            out.binding_k = k;
        }
        if (slack < -kSlackTolerance)
            out.contained = false;
    }
    return out;
}

bool mac_region_matches_subset_enumeration(const MacInstance &instance)
{
    check_instance(instance);
    if (instance.transmitters > 8)
        throw std::invalid_argument("subset enumeration capped at 8 transmitters");

    std::vector<double> a_sorted = instance.noise_exps;
    std::sort(a_sorted.begin(), a_sorted.end());

    bool all_subsets_ok = true;
    for (std::uint32_t mask = 1; mask < (1u << instance.transmitters); ++mask)
    {
        double d_sum = 0.0;
        for (int i = 0; i < instance.transmitters; ++i)
            if (mask & (1u << i))
                d_sum += instance.dof_loads[i];
        if (d_sum > subset_budget(std::popcount(mask), instance.antennas, a_sorted) + kSlackTolerance)
        {
            all_subsets_ok = false;
            break;
        }
    }
    return all_subsets_ok == mac_region_contains(instance).contained;
}

std::vector<SubsetSlope> mac_mi_slope_oracle(int transmitters, int antennas, std::span<const double> noise_exps,
                                             std::span<const double> p_grid, int trials, std::uint64_t seed)
{
    if (transmitters < 1 || transmitters > 8)
        throw std::invalid_argument("oracle supports 1..8 transmitters (subset enumeration)");
    if (antennas < 1 || antennas > 8)
        throw std::invalid_argument("oracle supports 1..8 receive antennas");
    if ((int)noise_exps.size() != antennas)
        throw std::invalid_argument("noise_exps size must equal the antenna count");
    if (p_grid.size() < 2)
        throw std::invalid_argument("need at least two power grid points");
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");

    const std::uint32_t num_masks = 1u << transmitters;
    std::vector<double> a_sorted(noise_exps.begin(), noise_exps.end());
    std::sort(a_sorted.begin(), a_sorted.end());

    // mi_sum[g][mask] accumulates MI over trials at grid point g.
    std::vector<std::vector<double>> mi_sum(p_grid.size(), std::vector<double>(num_masks, 0.0));

    for (int t = 0; t < trials; ++t)
    {
        // Same generic vectors across the grid (common random numbers), so
        // the O(1) offsets cancel out of the finite difference.
        auto rng = make_rng(derive_seed(seed, t));
        const Eigen::MatrixXcd h = gaussian_matrix(rng, antennas, transmitters);
        const Eigen::MatrixXcd g_dirs = gaussian_matrix(rng, antennas, antennas);

        for (std::size_t gi = 0; gi < p_grid.size(); ++gi)
        {
            const double power = p_grid[gi];
            Eigen::MatrixXcd noise = 1e-6 * Eigen::MatrixXcd::Identity(antennas, antennas);
            for (int m = 0; m < antennas; ++m)
                noise += std::pow(power, noise_exps[m]) * g_dirs.col(m) * g_dirs.col(m).adjoint();

            for (std::uint32_t mask = 1; mask < num_masks; ++mask)
            {
                Eigen::MatrixXcd sig = Eigen::MatrixXcd::Zero(antennas, antennas);
                for (int k = 0; k < transmitters; ++k)
                    if (mask & (1u << k))
                        sig += power * h.col(k) * h.col(k).adjoint();
                mi_sum[gi][mask] += gaussian_mi(sig, noise);
            }
        }
    }

    const std::size_t last = p_grid.size() - 1;
    const double dlog = std::log2(p_grid[last]) - std::log2(p_grid[last - 1]);

    std::vector<SubsetSlope> out;
    out.reserve(num_masks - 1);
    for (std::uint32_t mask = 1; mask < num_masks; ++mask)
    {
        SubsetSlope s;
        s.subset_mask = mask;
        s.slope = (mi_sum[last][mask] - mi_sum[last - 1][mask]) / (trials * dlog);
        s.predicted = subset_budget(std::popcount(mask), antennas, a_sorted);
        out.push_back(s);
    }
    return out;
}

} // namespace doflab
