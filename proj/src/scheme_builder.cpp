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

#include "scheme_builder.hpp"

#include "dof_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace doflab
{

namespace
{

// Appends `count` copies of a stream and returns their indices.
std::vector<int> add_streams(std::vector<StreamSpec> &streams, int count, int owner, MsgClass msg,
                             PrecoderKind precoder, double power_exp, double dof_load)
{
    std::vector<int> idx(std::max(count, 0));
    for (int i = 0; i < count; ++i)
    {
        idx[i] = (int)streams.size();
        streams.push_back({owner, msg, precoder, power_exp, dof_load});
    }
    return idx;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int> &b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Stage with explicit zero-force/decode sets; treat_as_noise is filled in
// afterwards so it always lists every remaining undecoded stream.
struct StageDraft
{
    std::vector<int> zero_force;
    std::vector<int> decode_jointly;
};

DecodePlan finish_plan(int receiver, const std::vector<StageDraft> &drafts, int total_streams)
{
    DecodePlan plan;
    plan.receiver = receiver;
    std::vector<bool> decoded(total_streams, false);
    for (const StageDraft &draft : drafts)
    {
        if (draft.decode_jointly.empty())
            continue;
        DecodeStage stage;
        stage.zero_force = draft.zero_force;
        stage.decode_jointly = draft.decode_jointly;
        std::vector<bool> excluded(total_streams, false);
        for (int s : draft.zero_force)
            excluded[s] = true;
        for (int s : draft.decode_jointly)
            excluded[s] = true;
        for (int s = 0; s < total_streams; ++s)
            if (!decoded[s] && !excluded[s])
                stage.treat_as_noise.push_back(s);
        for (int s : draft.decode_jointly)
            decoded[s] = true;
        plan.stages.push_back(std::move(stage));
    }
    return plan;
}

} // namespace

BetaBar beta_bars(CaseLabel label, const AntennaConfig &config, const CsitProfile &csit)
{
    auto [cfg, prof] = validate(config, csit);
    if (classify_case(cfg) != label)
        throw std::invalid_argument("beta_bars: case label does not match the configuration");

    const double m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
    BetaBar out;
    out.bar21 = prof.beta21;

    switch (label)
    {
    case CaseLabel::Case1Trivial:
        out.bar12.reset(); // no null-space group to govern
        break;
    case CaseLabel::Case1:
        out.bar12 = prof.beta12; // power is capped by beta12 itself
        break;
    case CaseLabel::Case2:
        out.bar12 = std::min(prof.beta12, (n2 - n1) / std::min(m2 - n1, n2 - m1));
        break;
    case CaseLabel::Case3:
    {
        const double group = m1 - n2 + std::min(m2 - n1, n2);
        if (group <= 0.0)
            out.bar12.reset(); // no clamped group; avoids dividing by zero
        else
            out.bar12 = std::min(prof.beta12, (m1 - n1) / group);
        break;
    }
    case CaseLabel::Case4:
    {
        const double numer = n2 - n1 + prof.beta21 * std::min(m1 - n2, n1);
        out.bar12 = std::min(prof.beta12, numer / std::min(m2 - n1, n2));
        break;
    }
    }
    return out;
}

SchemeSpec build_scheme(const AntennaConfig &config, const CsitProfile &csit)
{
    auto [cfg, prof] = validate(config, csit);
    if (cfg.n1 > cfg.n2)
        throw RelabelRequired("build_scheme requires n1 <= n2; build for the swapped "
                              "configuration to get the other corner");

    const int m1 = cfg.m1, m2 = cfg.m2, n1 = cfg.n1, n2 = cfg.n2;
    const double b12 = prof.beta12, b21 = prof.beta21;
    const CaseLabel label = classify_case(cfg);
    const BetaBar bars = beta_bars(label, cfg, prof);

    SchemeSpec scheme;
    scheme.config = cfg;
    scheme.csit = prof;
    scheme.case_label = label;
    scheme.beta_bar = bars;

    auto &streams = scheme.streams;
    std::vector<StageDraft> rx1, rx2;

    switch (label)
    {
    case CaseLabel::Case1Trivial:
    {
        // Both users send full-power unit-DoF streams; every stream is
        // decodable everywhere, so CSIT plays no role.
        auto t1c = add_streams(streams, std::min(m1, n1), 1, MsgClass::Common, PrecoderKind::Generic, 1.0, 1.0);
        auto t2c = add_streams(streams, std::min(std::max(n1 - m1, 0), m2), 2, MsgClass::Common,
                               PrecoderKind::Generic, 1.0, 1.0);
        rx1 = {{{}, concat(t1c, t2c)}};
        rx2 = {{{}, concat(t1c, t2c)}};
        break;
    }
    case CaseLabel::Case1:
    {
        auto t1c = add_streams(streams, std::min(m1, n1), 1, MsgClass::Common, PrecoderKind::Generic, 1.0, 1.0);
        auto t2c = add_streams(streams, std::max(n1 - m1, 0), 2, MsgClass::Common, PrecoderKind::Generic, 1.0, 1.0);
        auto t2p =
            add_streams(streams, m2 - n1, 2, MsgClass::Private, PrecoderKind::NullOfCross, b12, b12);
        // Receiver 1 decodes the full-power streams over the private-stream
        // floor; receiver 2 has room to decode everything at once.
        rx1 = {{{}, concat(t1c, t2c)}};
        rx2 = {{{}, concat(concat(t1c, t2c), t2p)}};
        break;
    }
    case CaseLabel::Case2:
    {
        const int null_count = std::min(m2 - n1, n2 - m1);
        const double bar12 = *bars.bar12;
        auto t1c = add_streams(streams, m1, 1, MsgClass::Common, PrecoderKind::Generic, 1.0, 1.0);
        auto t2c = add_streams(streams, m2, 2, MsgClass::Common, PrecoderKind::Generic, 1.0,
                               double(n1 - m1) / double(m2));
        auto t2p = add_streams(streams, null_count, 2, MsgClass::Private, PrecoderKind::NullOfCross, bar12, bar12);
        // Both receivers zero-force transmitter 1 and peel the elevated
        // multiplexed streams first; receiver 1 then decodes its own
        // signals, receiver 2 its private ones.
        rx1 = {{t1c, t2c}, {{}, t1c}};
        rx2 = {{t1c, t2c}, {t1c, t2p}};
        break;
    }
    case CaseLabel::Case3:
    {
        const int full_group = n2 - m1;
        const int clamped_group = m1 - n2 + std::min(m2 - n1, n2);
        const double bar12 = bars.bar12.value_or(b12);
        auto t1c = add_streams(streams, m1, 1, MsgClass::Common, PrecoderKind::Generic, 1.0,
                               double(n1) / double(m1));
        auto t2pa = add_streams(streams, full_group, 2, MsgClass::Private, PrecoderKind::NullOfCross, b12, b12);
        auto t2pb =
            add_streams(streams, clamped_group, 2, MsgClass::Private, PrecoderKind::NullOfCross, bar12, bar12);
        rx1 = {{{}, t1c}};
        rx2 = {{t2pa, t1c}, {{}, concat(t2pa, t2pb)}};
        break;
    }
    case CaseLabel::Case4:
    {
        const int t1_null = std::min(m1 - n2, n1);
        const int t2_null = std::min(m2 - n1, n2);
        const double bar12 = *bars.bar12;
        const double common_load = (n1 - b21 * t1_null) / double(m1);
        auto t1c = add_streams(streams, m1, 1, MsgClass::Common, PrecoderKind::Generic, 1.0, common_load);
        auto t1p = add_streams(streams, t1_null, 1, MsgClass::Private, PrecoderKind::NullOfCross, b21, b21);
        auto t2p = add_streams(streams, t2_null, 2, MsgClass::Private, PrecoderKind::NullOfCross, bar12, bar12);
        // Each receiver peels the elevated common streams over its own
        // private-stream floor, then decodes its private streams.
        rx1 = {{{}, t1c}, {{}, t1p}};
        rx2 = {{{}, t1c}, {{}, t2p}};
        break;
    }
    }

    scheme.plans[0] = finish_plan(1, rx1, (int)streams.size());
    scheme.plans[1] = finish_plan(2, rx2, (int)streams.size());

    scheme.predicted.d1 = std::min(m1, n1);
    scheme.predicted.d2 = closed_form_d2(label, cfg, prof);
    return scheme;
}

std::vector<StageMacView> stage_mac_views(const SchemeSpec &scheme)
{
    std::vector<StageMacView> out;
    for (const DecodePlan &plan : scheme.plans)
    {
        const int rx_dims = plan.receiver == 1 ? scheme.config.n1 : scheme.config.n2;
        for (int si = 0; si < (int)plan.stages.size(); ++si)
        {
            const DecodeStage &stage = plan.stages[si];
            StageMacView view;
            view.receiver = plan.receiver;
            view.stage = si;
            view.dims = rx_dims - (int)stage.zero_force.size();
            if (view.dims <= 0)
                throw std::invalid_argument("zero-forced subspace swallows the whole receiver");

            // Floor exponents: streams null-steered toward this receiver sit
            // at the floor (exponent 0); every other noise stream elevates
            // one dimension to its transmit exponent.
            std::vector<double> elevated;
            for (int s : stage.treat_as_noise)
            {
                const StreamSpec &spec = scheme.streams[s];
                const bool at_floor =
                    spec.precoder == PrecoderKind::NullOfCross && spec.avoided_receiver() == plan.receiver;
                if (!at_floor && spec.power_exp > 0.0)
                    elevated.push_back(spec.power_exp);
            }
            std::sort(elevated.begin(), elevated.end(), std::greater<>());
            elevated.resize(std::min<std::size_t>(elevated.size(), view.dims), 0.0);
            view.noise_exps.assign(view.dims, 0.0);
            std::copy(elevated.begin(), elevated.end(), view.noise_exps.begin());

            for (int s : stage.decode_jointly)
                view.dof_loads.push_back(scheme.streams[s].dof_load);
            out.push_back(std::move(view));
        }
    }
    return out;
}

} // namespace doflab
