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

#include "channel.hpp"
#include "mutual_info.hpp"
#include "types.hpp"

#include <cstdint>
#include <span>

namespace doflab
{

// Feasibility slack before a decode stage stops earning full rate credit,
// and the slack below which a scheme is reported as infeasible outright.
// Both are in DoF units (bits divided by log2 P).
inline constexpr double kStageCreditTolerance = 0.1;
inline constexpr double kInfeasibleMargin = -0.25;

// MAC constraint record for one nonempty subset of a stage's jointly decoded
// streams: achieved mutual information against the subset's target rate.
struct SubsetMargin
{
    std::uint32_t subset_mask = 0; // bit i = i-th stream of decode_jointly
    double mi_bits = 0.0;
    double target_bits = 0.0;
    double dof_margin = 0.0; // (mi - target) / log2(P)
};

struct StageMargin
{
    int receiver = 1;
    int stage = 0;
    std::vector<SubsetMargin> subsets;
    double min_margin = 0.0;
    bool feasible = true; // all margins >= -kStageCreditTolerance
};

// Evaluates every decode stage of a realized scheme on one channel draw:
// zero-forced streams are projected out, decoded streams of earlier stages
// are subtracted, remaining undecoded streams raise the noise covariance,
// and every nonempty subset of the stage's joint set is scored.
std::vector<StageMargin> stage_margins(const SchemeSpec &scheme, const ChannelSet &channels,
                                       const std::vector<Eigen::VectorXcd> &precoders);

// Finite-SNR rate sweep with regressed DoF slopes. Rates are averaged over
// trials; slopes are finite differences of consecutive grid points with the
// last pair as headline. Identical output for any thread count.
struct SlopeReport
{
    AntennaConfig config;
    CsitProfile csit;
    DofPoint predicted;

    std::vector<double> p_grid;
    std::vector<double> rate_user1; // mean bits per channel use, per grid point
    std::vector<double> rate_user2;
    std::vector<double> min_margin;   // per grid point, min over stages/subsets of mean margin
    std::vector<double> slope_user1;  // consecutive-pair slopes, size p_grid.size()-1
    std::vector<double> slope_user2;
    double headline_slope1 = 0.0;
    double headline_slope2 = 0.0;
    double min_margin_at_pmax = 0.0;
    bool scheme_infeasible = false;

    int trials = 0;
    std::uint64_t seed = 0;
};

// Builds the scheme for (config, csit), runs `trials` channel draws per grid
// point, credits each stream with its target rate when its decode stages are
// feasible (proportionally otherwise, so the report stays continuous in P),
// and regresses the slopes. threads <= 0 picks a default (the
// DOF_LAB_THREADS environment variable, else the hardware count).
SlopeReport estimate_dof_slopes(const AntennaConfig &config, const CsitProfile &csit,
                                std::span<const double> p_grid, int trials, std::uint64_t seed, int threads = 0);

// Received interference power of one group of null-steered streams at the
// receiver they avoid, across the power grid, with its log-log fitted
// exponent. A correctly built scheme keeps every exponent near zero.
struct FloorFit
{
    int owner = 2;
    int receiver = 1; // the avoided receiver
    double power_exp = 0.0;
    std::vector<double> mean_power; // per grid point, averaged over trials
    double exponent = 0.0;
};

// One fit per (owner, transmit-exponent) group of private streams; empty
// when the scheme has no private streams.
std::vector<FloorFit> interference_floor_probe(const SchemeSpec &scheme, std::span<const double> p_grid,
                                               int trials, std::uint64_t seed, int threads = 0);

} // namespace doflab
