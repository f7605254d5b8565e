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

#include <cstdint>
#include <span>
#include <vector>

namespace doflab
{

// A multiple-access channel with single-antenna transmitters and
// per-dimension elevated noise floors P^alpha_m at an M-antenna receiver.
struct MacInstance
{
    int transmitters = 1;           // K
    int antennas = 1;               // M
    std::vector<double> noise_exps; // alpha_m in [0,1], one per receive dimension
    std::vector<double> dof_loads;  // d_k >= 0, one per transmitter
};

// Constraints are closed; ties that land a rounding error outside still
// count as contained.
inline constexpr double kSlackTolerance = 1e-12;

struct MacCheck
{
    bool contained = false;
    int binding_k = 0;         // 1-based k with the smallest slack
    std::vector<double> slack; // slack of the k-th sorted constraint, k = 1..K
};

// Tests whether the DoF tuple lies in the achievable region: for every k,
// (sum of the k largest d_i) + (sum of the min(k,M) smallest alpha_j)
// must not exceed min(k, M).
MacCheck mac_region_contains(const MacInstance &instance);

// Sorted-constraint region vs. explicit enumeration of all nonempty subsets:
// returns true when both agree for this instance. Enumeration is 2^K, so K
// is capped at 8.
bool mac_region_matches_subset_enumeration(const MacInstance &instance);

// Numerically regressed MI slope of every nonempty transmitter subset, each
// paired with the predicted value min(|U|,M) - sum of the min(|U|,M)
// smallest alphas.
struct SubsetSlope
{
    std::uint32_t subset_mask = 0;
    double slope = 0.0;
    double predicted = 0.0;
};

// Monte-Carlo oracle for the region: draws generic channel and noise-shaping
// vectors, computes conditional MI per subset on the power grid via
// gaussian_mi, and reports finite-difference slopes over the last grid pair.
std::vector<SubsetSlope> mac_mi_slope_oracle(int transmitters, int antennas, std::span<const double> noise_exps,
                                             std::span<const double> p_grid, int trials, std::uint64_t seed);

} // namespace doflab
