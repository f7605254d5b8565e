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

#include "types.hpp"

#include <algorithm>

namespace doflab
{

const char *to_string(CaseLabel label)
{
    switch (label)
    {
    case CaseLabel::Case1Trivial:
        return "Case1Trivial";
    case CaseLabel::Case1:
        return "Case1";
    case CaseLabel::Case2:
        return "Case2";
    case CaseLabel::Case3:
        return "Case3";
    case CaseLabel::Case4:
        return "Case4";
    }
    return "?";
}

std::vector<int> SchemeSpec::streams_of(int owner) const
{
    std::vector<int> out;
    for (int s = 0; s < (int)streams.size(); ++s)
        if (streams[s].owner == owner)
            out.push_back(s);
    return out;
}

namespace
{

void check_count(int value, const char *name)
{
    if (value < 1)
        throw ValidationError(std::string(name) + " must be >= 1");
}

double clamp_beta(double value, const char *name)
{
    if (!(value >= 0.0)) // also rejects NaN
        throw ValidationError(std::string(name) + " must be >= 0");
    return std::min(value, 1.0);
}

} // namespace

std::pair<AntennaConfig, CsitProfile> validate(const AntennaConfig &config, const CsitProfile &csit)
{
    check_count(config.m1, "m1");
    check_count(config.m2, "m2");
    check_count(config.n1, "n1");
    check_count(config.n2, "n2");

    CsitProfile out = csit;
    out.beta12 = clamp_beta(csit.beta12, "beta12");
    out.beta21 = clamp_beta(csit.beta21, "beta21");
    out.beta11 = clamp_beta(csit.beta11, "beta11");
    out.beta22 = clamp_beta(csit.beta22, "beta22");
    return {config, out};
}

} // namespace doflab
