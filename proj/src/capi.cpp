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

#include "doflab.h"

#include "dof_formula.hpp"
#include "json_io.hpp"
#include "mac_region.hpp"
#include "rate_engine.hpp"
#include "scheme_builder.hpp"
#include "types.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <span>
#include <string>

struct doflab_scheme
{
    doflab::SchemeSpec spec;
};

namespace
{

thread_local std::string g_last_error;

doflab_status fail(doflab_status status, const char *message)
{
    g_last_error = message;
    return status;
}

char *copy_string(const std::string &text)
{
    char *out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

doflab::AntennaConfig to_config(const doflab_params &p) { return {p.m1, p.m2, p.n1, p.n2}; }

doflab::CsitProfile to_csit(const doflab_params &p) { return {p.beta12, p.beta21, p.beta11, p.beta22}; }

void fill_breakdown(const doflab::TermBreakdown &in, doflab_dof_breakdown &out)
{
    out.term_a = in.a;
    out.term_b = in.b;
    out.term_c = in.c;
    out.dof = in.d2;
}

// Runs fn, translating C++ exceptions into status codes.
template <typename Fn> doflab_status guarded(Fn &&fn)
{
    try
    {
        fn();
        g_last_error.clear();
        return DOFLAB_OK;
    }
    catch (const doflab::RelabelRequired &e)
    {
        return fail(DOFLAB_ERR_RELABEL_REQUIRED, e.what());
    }
    catch (const doflab::ValidationError &e)
    {
        return fail(DOFLAB_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::invalid_argument &e)
    {
        return fail(DOFLAB_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::exception &e)
    {
        return fail(DOFLAB_ERR_RUNTIME, e.what());
    }
    catch (...)
    {
        return fail(DOFLAB_ERR_RUNTIME, "unknown error");
    }
}

doflab_status check_sim_options(const doflab_sim_options *options)
{
    if (!options || !options->p_grid)
        return fail(DOFLAB_ERR_NULL_POINTER, "simulation options and power grid must not be null");
    if (options->p_count < 2)
        return fail(DOFLAB_ERR_INVALID_ARGUMENT, "power grid needs at least 2 points");
    return DOFLAB_OK;
}

} // namespace

extern "C"
{

    const char *doflab_version(void) { return "0.1.0"; }

    const char *doflab_status_name(doflab_status status)
    {
        switch (status)
        {
        case DOFLAB_OK:
            return "ok";
        case DOFLAB_ERR_NULL_POINTER:
            return "null pointer";
        case DOFLAB_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case DOFLAB_ERR_RELABEL_REQUIRED:
            return "relabel required";
        case DOFLAB_ERR_RUNTIME:
            return "runtime error";
        }
        return "unknown status";
    }

    const char *doflab_last_error(void) { return g_last_error.c_str(); }

    void doflab_string_free(char *str) { delete[] str; }

    doflab_status doflab_validate(doflab_params *params)
    {
        if (!params)
            return fail(DOFLAB_ERR_NULL_POINTER, "params must not be null");
        return guarded([&] {
            auto [cfg, prof] = doflab::validate(to_config(*params), to_csit(*params));
            (void)cfg;
            params->beta12 = prof.beta12;
            params->beta21 = prof.beta21;
            params->beta11 = prof.beta11;
            params->beta22 = prof.beta22;
        });
    }

    doflab_status doflab_dof_user2(const doflab_params *params, doflab_dof_breakdown *out)
    {
        if (!params || !out)
            return fail(DOFLAB_ERR_NULL_POINTER, "params and out must not be null");
        return guarded(
            [&] { fill_breakdown(doflab::dof_user2_given_user1_max(to_config(*params), to_csit(*params)), *out); });
    }

    doflab_status doflab_dof_user1(const doflab_params *params, doflab_dof_breakdown *out)
    {
        if (!params || !out)
            return fail(DOFLAB_ERR_NULL_POINTER, "params and out must not be null");
        return guarded(
            [&] { fill_breakdown(doflab::dof_user1_given_user2_max(to_config(*params), to_csit(*params)), *out); });
    }

    doflab_status doflab_classify(const doflab_params *params, doflab_case *out)
    {
        if (!params || !out)
            return fail(DOFLAB_ERR_NULL_POINTER, "params and out must not be null");
        return guarded([&] { *out = (doflab_case)doflab::classify_case(to_config(*params)); });
    }

    doflab_status doflab_closed_form_d2(const doflab_params *params, double *out)
    {
        if (!params || !out)
            return fail(DOFLAB_ERR_NULL_POINTER, "params and out must not be null");
        return guarded([&] {
            const auto cfg = to_config(*params);
            *out = doflab::closed_form_d2(doflab::classify_case(cfg), cfg, to_csit(*params));
        });
    }

    doflab_status doflab_beta_bars(const doflab_params *params, double *bar12, int *bar12_defined, double *bar21)
    {
        if (!params || !bar12 || !bar12_defined || !bar21)
            return fail(DOFLAB_ERR_NULL_POINTER, "all output pointers must be non-null");
        return guarded([&] {
            const auto cfg = to_config(*params);
            const auto bars = doflab::beta_bars(doflab::classify_case(cfg), cfg, to_csit(*params));
            *bar12_defined = bars.bar12.has_value() ? 1 : 0;
            *bar12 = bars.bar12.value_or(0.0);
            *bar21 = bars.bar21;
        });
    }

    doflab_status doflab_sweep_beta(const doflab_params *params, int which_beta, const double *grid, int count,
                                    double *d2_out)
    {
        if (!params || !grid || !d2_out)
            return fail(DOFLAB_ERR_NULL_POINTER, "params, grid and d2_out must not be null");
        if (count < 1)
            return fail(DOFLAB_ERR_INVALID_ARGUMENT, "grid must have at least one point");
        return guarded([&] {
            const auto points = doflab::sweep_beta(to_config(*params), to_csit(*params), which_beta,
                                                   std::span<const double>(grid, (std::size_t)count));
            for (int i = 0; i < count; ++i)
                d2_out[i] = points[i].second;
        });
    }

    doflab_status doflab_scheme_build(const doflab_params *params, doflab_scheme **out)
    {
        if (!params || !out)
            return fail(DOFLAB_ERR_NULL_POINTER, "params and out must not be null");
        return guarded([&] {
            auto scheme = std::make_unique<doflab_scheme>();
            scheme->spec = doflab::build_scheme(to_config(*params), to_csit(*params));
            *out = scheme.release();
        });
    }

    void doflab_scheme_free(doflab_scheme *scheme) { delete scheme; }

    doflab_status doflab_scheme_predicted(const doflab_scheme *scheme, double *d1, double *d2)
    {
        if (!scheme || !d1 || !d2)
            return fail(DOFLAB_ERR_NULL_POINTER, "scheme and outputs must not be null");
        *d1 = scheme->spec.predicted.d1;
        *d2 = scheme->spec.predicted.d2;
        g_last_error.clear();
        return DOFLAB_OK;
    }

    doflab_status doflab_scheme_to_json(const doflab_scheme *scheme, char **json_out)
    {
        if (!scheme || !json_out)
            return fail(DOFLAB_ERR_NULL_POINTER, "scheme and json_out must not be null");
        return guarded([&] { *json_out = copy_string(doflab::scheme_to_json(scheme->spec).dump()); });
    }

    doflab_status doflab_simulate(const doflab_params *params, const doflab_sim_options *options,
                                  char **report_json)
    {
        if (!params || !report_json)
            return fail(DOFLAB_ERR_NULL_POINTER, "params and report_json must not be null");
        if (doflab_status s = check_sim_options(options); s != DOFLAB_OK)
            return s;
        return guarded([&] {
            const auto report = doflab::estimate_dof_slopes(
                to_config(*params), to_csit(*params),
                std::span<const double>(options->p_grid, (std::size_t)options->p_count), options->trials,
                options->seed, options->threads);
            *report_json = copy_string(doflab::slope_report_to_json(report).dump());
        });
    }

    doflab_status doflab_interference_probe(const doflab_params *params, const doflab_sim_options *options,
                                            char **report_json)
    {
        if (!params || !report_json)
            return fail(DOFLAB_ERR_NULL_POINTER, "params and report_json must not be null");
        if (doflab_status s = check_sim_options(options); s != DOFLAB_OK)
            return s;
        return guarded([&] {
            const auto scheme = doflab::build_scheme(to_config(*params), to_csit(*params));
            const auto fits = doflab::interference_floor_probe(
                scheme, std::span<const double>(options->p_grid, (std::size_t)options->p_count), options->trials,
                options->seed, options->threads);
            *report_json = copy_string(doflab::floor_fits_to_json(fits).dump());
        });
    }

    doflab_status doflab_mac_region_check(int transmitters, int antennas, const double *dof_loads,
                                          const double *noise_exps, int *contained, int *binding_k, double *slack)
    {
        if (!dof_loads || !noise_exps || !contained || !binding_k || !slack)
            return fail(DOFLAB_ERR_NULL_POINTER, "all array and output pointers must be non-null");
        return guarded([&] {
            doflab::MacInstance inst;
            inst.transmitters = transmitters;
            inst.antennas = antennas;
            inst.dof_loads.assign(dof_loads, dof_loads + std::max(transmitters, 0));
            inst.noise_exps.assign(noise_exps, noise_exps + std::max(antennas, 0));
            const auto check = doflab::mac_region_contains(inst);
            *contained = check.contained ? 1 : 0;
            *binding_k = check.binding_k;
            std::copy(check.slack.begin(), check.slack.end(), slack);
        });
    }

    doflab_status doflab_mac_oracle(int transmitters, int antennas, const double *noise_exps,
                                    const double *p_grid, int p_count, int trials, uint64_t seed,
                                    char **report_json)
    {
        if (!noise_exps || !p_grid || !report_json)
            return fail(DOFLAB_ERR_NULL_POINTER, "noise_exps, p_grid and report_json must not be null");
        if (p_count < 2)
            return fail(DOFLAB_ERR_INVALID_ARGUMENT, "power grid needs at least 2 points");
        return guarded([&] {
            const auto slopes = doflab::mac_mi_slope_oracle(
                transmitters, antennas, std::span<const double>(noise_exps, (std::size_t)std::max(antennas, 0)),
                std::span<const double>(p_grid, (std::size_t)p_count), trials, seed);
            *report_json = copy_string(doflab::subset_slopes_to_json(slopes).dump());
        });
    }

} // extern "C"
