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

#include <initializer_list>
#include <span>

namespace doflab
{

// The three budget terms bounding the DoF of the non-saturated user, and
// their floored minimum d2 = min+(a, b, c):
//   a - DoF the user could get with perfect CSIT,
//   b - what its own receiver can decode on top of the interference,
//   c - what its transmitter can send without hurting the saturated user.
struct TermBreakdown
{
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d2 = 0.0;
};

// min of the arguments, floored at zero when the minimum is negative.
double minplus(std::initializer_list<double> values);
double minplus(double x, double y);
double minplus(double x, double y, double z);

// Budget term A: the perfect-CSIT DoF of user 2 once user 1 takes min(m1,n1).
double term_a(const AntennaConfig &config);

// Budget term B: receiver-2 decodability with partial-CSIT noise floors.
double term_b(const AntennaConfig &config, double beta12, double beta21);

// Budget term C: what transmitter 2 can emit without disturbing receiver 1.
double term_c(const AntennaConfig &config, double beta12);

// DoF achievable by user 2 while user 1 gets its interference-free maximum
// min(m1, n1). Evaluates the formula as stated for any antenna ordering;
// independent of beta11/beta22 by construction.
TermBreakdown dof_user2_given_user1_max(const AntennaConfig &config, const CsitProfile &csit);

// The swapped corner point: DoF achievable by user 1 while user 2 gets
// min(m2, n2). Same formula with all user indices exchanged.
TermBreakdown dof_user1_given_user2_max(const AntennaConfig &config, const CsitProfile &csit);

// Classifies a configuration with n1 <= n2 into the achievability case it
// belongs to. Throws RelabelRequired when n1 > n2.
CaseLabel classify_case(const AntennaConfig &config);

// Per-case closed form for d2. Throws std::invalid_argument when the label
// does not match the configuration.
double closed_form_d2(CaseLabel label, const AntennaConfig &config, const CsitProfile &csit);

// Pointwise evaluation of dof_user2_given_user1_max along a grid of one
// cross-link beta (which_beta is 12 or 21); the other betas come from csit.
std::vector<std::pair<double, double>> sweep_beta(const AntennaConfig &config, const CsitProfile &csit,
                                                  int which_beta, std::span<const double> grid);

} // namespace doflab
