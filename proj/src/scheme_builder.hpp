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

namespace doflab
{

// Clamped power exponents for the given case. bar12 caps the power of the
// clamped null-space group so its load never exceeds what the other
// receiver's decoding stages tolerate; it is empty when the case has no
// clamped group. bar21 is the exponent spent by transmitter 1's null-space
// streams (only consumed in Case 4).
BetaBar beta_bars(CaseLabel label, const AntennaConfig &config, const CsitProfile &csit);

// Compiles (config, csit) into an executable transmission plan for the
// corner point where user 1 achieves min(m1, n1): stream list with power
// exponents and DoF loads, per-receiver staged decode plans, and the
// predicted DoF pair. Requires n1 <= n2 (throws RelabelRequired otherwise);
// the swapped corner is obtained by building for the index-exchanged
// configuration.
SchemeSpec build_scheme(const AntennaConfig &config, const CsitProfile &csit);

// Per-stage MAC abstraction at a receiver: effective dimensions after
// zero-forcing plus the noise-floor exponent of every dimension. Used to
// check the decode stages against the MAC DoF region.
struct StageMacView
{
    int receiver = 1;
    int stage = 0;
    int dims = 0;                   // receive dimensions left after zero-forcing
    std::vector<double> noise_exps; // per-dimension floor exponent, size dims
    std::vector<double> dof_loads;  // loads of the jointly decoded streams
};

// Derives the analytic MAC view of every decode stage of the scheme.
std::vector<StageMacView> stage_mac_views(const SchemeSpec &scheme);

} // namespace doflab
