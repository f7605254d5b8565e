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

#include "dof_formula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace doflab
{

double minplus(std::initializer_list<double> values)
{
    double m = std::numeric_limits<double>::infinity();
    for (double v : values)
        m = std::min(m, v);
    return m < 0.0 ? 0.0 : m;
}

double minplus(double x, double y) { return minplus({x, y}); }

double minplus(double x, double y, double z) { return minplus({x, y, z}); }

double term_a(const AntennaConfig &cfg)
{
    const double m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
    const double total = std::min({std::max(m1, n2), std::max(m2, n1), m1 + m2, n1 + n2});
    return total - std::min(m1, n1);
}

double term_b(const AntennaConfig &cfg, double beta12, double beta21)
{
    const double m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
    return minplus(n1 - m1, m2) + std::min(m1, n2) - std::min(m1, n1) //
           + beta12 * minplus(n2 - m1, m2)                            //
           + beta21 * minplus(m1 - n2, n1);
}

double term_c(const AntennaConfig &cfg, double beta12)
{
    const double m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
    return minplus(n1 - m1, m2) + beta12 * minplus(m2 - n1, n2);
}

TermBreakdown dof_user2_given_user1_max(const AntennaConfig &config, const CsitProfile &csit)
{
    auto [cfg, prof] = validate(config, csit);
    TermBreakdown out;
    out.a = term_a(cfg);
    out.b = term_b(cfg, prof.beta12, prof.beta21);
    out.c = term_c(cfg, prof.beta12);
    out.d2 = minplus(out.a, out.b, out.c);
    return out;
}

TermBreakdown dof_user1_given_user2_max(const AntennaConfig &config, const CsitProfile &csit)
{
    auto [cfg, prof] = validate(config, csit);
    return dof_user2_given_user1_max(cfg.swapped(), prof.swapped());
}

CaseLabel classify_case(const AntennaConfig &config)
{
    auto [cfg, unused] = validate(config, {});
    (void)unused;
    if (cfg.n1 > cfg.n2)
        throw RelabelRequired("classify_case requires n1 <= n2; swap the user indices");

    if (cfg.m2 <= cfg.n1)
        return CaseLabel::Case1Trivial;
    if (cfg.m2 <= cfg.n2)
        return CaseLabel::Case1;
    // From here on m2 > n2.
    if (cfg.m1 < cfg.n1)
        return CaseLabel::Case2;
    if (cfg.m1 <= cfg.n2)
        return CaseLabel::Case3;
    return CaseLabel::Case4;
}

double closed_form_d2(CaseLabel label, const AntennaConfig &config, const CsitProfile &csit)
{
    auto [cfg, prof] = validate(config, csit);
    if (classify_case(cfg) != label)
    {
        std::ostringstream msg;
        msg << "configuration (" << cfg.m1 << "," << cfg.m2 << "," << cfg.n1 << "," << cfg.n2 << ") is "
            << to_string(classify_case(cfg)) << ", not " << to_string(label);
        throw std::invalid_argument(msg.str());
    }

    const double m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
    const double b12 = prof.beta12, b21 = prof.beta21;

    switch (label)
    {
    case CaseLabel::Case1Trivial:
        // No cross null space at tx 2; partial CSIT buys nothing.
        return std::min(m2, term_a(cfg));
    case CaseLabel::Case1:
        return std::max(n1 - m1, 0.0) + b12 * (m2 - n1);
    case CaseLabel::Case2:
        return std::min(n2 - m1, n1 - m1 + b12 * std::min(m2 - n1, n2 - m1));
    case CaseLabel::Case3:
        return std::min(b12 * std::min(m2 - n1, n2), m1 - n1 + b12 * (n2 - m1));
    case CaseLabel::Case4:
        return std::min(b12 * std::min(m2 - n1, n2), n2 - n1 + b21 * std::min(m1 - n2, n1));
    }
    throw std::logic_error("unreachable case label");
}

std::vector<std::pair<double, double>> sweep_beta(const AntennaConfig &config, const CsitProfile &csit,
                                                  int which_beta, std::span<const double> grid)
{
    if (which_beta != 12 && which_beta != 21)
        throw std::invalid_argument("which_beta must be 12 or 21");

    std::vector<std::pair<double, double>> out;
    out.reserve(grid.size());
    for (double beta : grid)
    {
        CsitProfile prof = csit;
        (which_beta == 12 ? prof.beta12 : prof.beta21) = beta;
        out.emplace_back(beta, dof_user2_given_user1_max(config, prof).d2);
    }
    return out;
}

} // namespace doflab
