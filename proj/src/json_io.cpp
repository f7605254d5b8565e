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

#include "json_io.hpp"

#include <stdexcept>

namespace doflab
{

using nlohmann::json;

namespace
{

std::string precoder_name(const StreamSpec &s)
{
    if (s.precoder == PrecoderKind::Generic)
        return "generic";
    return s.owner == 2 ? "null_of(1<-2)" : "null_of(2<-1)";
}

PrecoderKind precoder_from_name(const std::string &name)
{
    if (name == "generic")
        return PrecoderKind::Generic;
    if (name == "null_of(1<-2)" || name == "null_of(2<-1)")
        return PrecoderKind::NullOfCross;
    throw std::invalid_argument("unknown precoder kind: " + name);
}

CaseLabel case_from_name(const std::string &name)
{
    for (CaseLabel label : {CaseLabel::Case1Trivial, CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3,
                            CaseLabel::Case4})
        if (name == to_string(label))
            return label;
    throw std::invalid_argument("unknown case label: " + name);
}

json config_to_json(const AntennaConfig &c)
{
    return {{"m1", c.m1}, {"m2", c.m2}, {"n1", c.n1}, {"n2", c.n2}};
}

json csit_to_json(const CsitProfile &p)
{
    return {{"beta12", p.beta12}, {"beta21", p.beta21}, {"beta11", p.beta11}, {"beta22", p.beta22}};
}

} // namespace

json scheme_to_json(const SchemeSpec &scheme)
{
    json streams = json::array();
    for (const StreamSpec &s : scheme.streams)
        streams.push_back({{"owner", s.owner},
                           {"msg_class", s.msg_class == MsgClass::Common ? "common" : "private"},
                           {"precoder", precoder_name(s)},
                           {"power_exp", s.power_exp},
                           {"dof_load", s.dof_load}});

    json plans = json::array();
    for (const DecodePlan &plan : scheme.plans)
    {
        json stages = json::array();
        for (const DecodeStage &stage : plan.stages)
            stages.push_back({{"zero_force", stage.zero_force},
                              {"decode_jointly", stage.decode_jointly},
                              {"treat_as_noise", stage.treat_as_noise}});
        plans.push_back({{"receiver", plan.receiver}, {"stages", stages}});
    }

    return {{"config", config_to_json(scheme.config)},
            {"csit", csit_to_json(scheme.csit)},
            {"case", to_string(scheme.case_label)},
            {"beta_bar12", scheme.beta_bar.bar12 ? json(*scheme.beta_bar.bar12) : json(nullptr)},
            {"beta_bar21", scheme.beta_bar.bar21},
            {"streams", streams},
            {"plans", plans},
            {"predicted", {{"d1", scheme.predicted.d1}, {"d2", scheme.predicted.d2}}}};
}

SchemeSpec scheme_from_json(const json &doc)
{
    SchemeSpec scheme;
    scheme.config = {doc.at("config").at("m1").get<int>(), doc.at("config").at("m2").get<int>(),
                     doc.at("config").at("n1").get<int>(), doc.at("config").at("n2").get<int>()};
    scheme.csit = {doc.at("csit").at("beta12").get<double>(), doc.at("csit").at("beta21").get<double>(),
                   doc.at("csit").at("beta11").get<double>(), doc.at("csit").at("beta22").get<double>()};
    scheme.case_label = case_from_name(doc.at("case").get<std::string>());
    if (!doc.at("beta_bar12").is_null())
        scheme.beta_bar.bar12 = doc.at("beta_bar12").get<double>();
    scheme.beta_bar.bar21 = doc.at("beta_bar21").get<double>();

    for (const json &s : doc.at("streams"))
    {
        StreamSpec spec;
        spec.owner = s.at("owner").get<int>();
        spec.msg_class = s.at("msg_class").get<std::string>() == "common" ? MsgClass::Common : MsgClass::Private;
        spec.precoder = precoder_from_name(s.at("precoder").get<std::string>());
        spec.power_exp = s.at("power_exp").get<double>();
        spec.dof_load = s.at("dof_load").get<double>();
        scheme.streams.push_back(spec);
    }

    const json &plans = doc.at("plans");
    if (plans.size() != 2)
        throw std::invalid_argument("scheme needs exactly two decode plans");
    for (int pi = 0; pi < 2; ++pi)
    {
        DecodePlan plan;
        plan.receiver = plans[pi].at("receiver").get<int>();
        for (const json &st : plans[pi].at("stages"))
        {
            DecodeStage stage;
            stage.zero_force = st.at("zero_force").get<std::vector<int>>();
            stage.decode_jointly = st.at("decode_jointly").get<std::vector<int>>();
            stage.treat_as_noise = st.at("treat_as_noise").get<std::vector<int>>();
            plan.stages.push_back(std::move(stage));
        }
        scheme.plans[pi] = std::move(plan);
    }

    scheme.predicted = {doc.at("predicted").at("d1").get<double>(), doc.at("predicted").at("d2").get<double>()};
    return scheme;
}

json slope_report_to_json(const SlopeReport &report)
{
    return {{"config", config_to_json(report.config)},
            {"csit", csit_to_json(report.csit)},
            {"predicted", {{"d1", report.predicted.d1}, {"d2", report.predicted.d2}}},
            {"p_grid", report.p_grid},
            {"rate_user1", report.rate_user1},
            {"rate_user2", report.rate_user2},
            {"min_margin", report.min_margin},
            {"slope_user1", report.slope_user1},
            {"slope_user2", report.slope_user2},
            {"headline_slope1", report.headline_slope1},
            {"headline_slope2", report.headline_slope2},
            {"min_margin_at_pmax", report.min_margin_at_pmax},
            {"scheme_infeasible", report.scheme_infeasible},
            {"trials", report.trials},
            {"seed", report.seed}};
}

json floor_fits_to_json(const std::vector<FloorFit> &fits)
{
    json out = json::array();
    for (const FloorFit &fit : fits)
        out.push_back({{"owner", fit.owner},
                       {"receiver", fit.receiver},
                       {"power_exp", fit.power_exp},
                       {"mean_power", fit.mean_power},
                       {"exponent", fit.exponent}});
    return out;
}

json mac_check_to_json(const MacCheck &check)
{
    return {{"contained", check.contained}, {"binding_k", check.binding_k}, {"slack", check.slack}};
}

json subset_slopes_to_json(const std::vector<SubsetSlope> &slopes)
{
    json out = json::array();
    for (const SubsetSlope &s : slopes)
        out.push_back({{"subset_mask", s.subset_mask}, {"slope", s.slope}, {"predicted", s.predicted}});
    return out;
}

} // namespace doflab
