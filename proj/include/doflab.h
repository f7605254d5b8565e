/* SPDX-License-Identifier: Apache-2.0
 *
 * dof-lab: achievable-DoF laboratory for the 2-user MIMO interference channel
 * Copyright (C) 2026 dof-lab developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ------------------------------------------------------------------------
 *
 * C interface of the dof-lab shared library. All functions return a status
 * code; doflab_last_error() describes the most recent failure on the calling
 * thread. Composite results (schemes, simulation reports) are returned as
 * JSON strings owned by the library; release them with doflab_string_free().
 */

#ifndef DOFLAB_H
#define DOFLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C"
{
#endif

#if defined(_WIN32)
#define DOFLAB_API __declspec(dllexport)
#else
#define DOFLAB_API __attribute__((visibility("default")))
#endif

    typedef enum doflab_status
    {
        DOFLAB_OK = 0,
        DOFLAB_ERR_NULL_POINTER = 1,
        DOFLAB_ERR_INVALID_ARGUMENT = 2,
        DOFLAB_ERR_RELABEL_REQUIRED = 3, /* operation needs n1 <= n2; swap the users */
        DOFLAB_ERR_RUNTIME = 4
    } doflab_status;

    typedef enum doflab_case
    {
        DOFLAB_CASE_1_TRIVIAL = 0,
        DOFLAB_CASE_1 = 1,
        DOFLAB_CASE_2 = 2,
        DOFLAB_CASE_3 = 3,
        DOFLAB_CASE_4 = 4
    } doflab_case;

    /* Antenna counts of the four nodes and the CSIT quality exponents. */
    typedef struct doflab_params
    {
        int m1, m2, n1, n2;
        double beta12, beta21, beta11, beta22;
    } doflab_params;

    /* The three budget terms of the corner-point DoF value and their floored
     * minimum. */
    typedef struct doflab_dof_breakdown
    {
        double term_a, term_b, term_c;
        double dof;
    } doflab_dof_breakdown;

    typedef struct doflab_sim_options
    {
        const double *p_grid; /* strictly increasing, at least 3 points */
        int p_count;
        int trials;    /* at least 10 */
        uint64_t seed;
        int threads; /* <= 0: DOF_LAB_THREADS env var, else hardware count */
    } doflab_sim_options;

    DOFLAB_API const char *doflab_version(void);
    DOFLAB_API const char *doflab_status_name(doflab_status status);

    /* Message describing the last failure on this thread; empty string when
     * the last call succeeded. */
    DOFLAB_API const char *doflab_last_error(void);

    DOFLAB_API void doflab_string_free(char *str);

    /* Checks antenna counts and clamps each beta into [0,1] in place. */
    DOFLAB_API doflab_status doflab_validate(doflab_params *params);

    /* DoF of user 2 while user 1 achieves min(m1,n1), and the swapped corner. */
    DOFLAB_API doflab_status doflab_dof_user2(const doflab_params *params, doflab_dof_breakdown *out);
    DOFLAB_API doflab_status doflab_dof_user1(const doflab_params *params, doflab_dof_breakdown *out);

    /* Achievability case of a configuration with n1 <= n2. */
    DOFLAB_API doflab_status doflab_classify(const doflab_params *params, doflab_case *out);

    /* Per-case closed form for the user-2 corner DoF (n1 <= n2). */
    DOFLAB_API doflab_status doflab_closed_form_d2(const doflab_params *params, double *out);

    /* Clamped power exponents of the case construction. *bar12_defined is 0
     * when the case has no group governed by bar12. */
    DOFLAB_API doflab_status doflab_beta_bars(const doflab_params *params, double *bar12, int *bar12_defined,
                                              double *bar21);

    /* d2 of the user-2 corner for each beta value in grid (which_beta picks
     * the swept cross link, 12 or 21; the other betas come from params). */
    DOFLAB_API doflab_status doflab_sweep_beta(const doflab_params *params, int which_beta, const double *grid,
                                               int count, double *d2_out);

    /* Compiled transmission plan (opaque). */
    typedef struct doflab_scheme doflab_scheme;

    DOFLAB_API doflab_status doflab_scheme_build(const doflab_params *params, doflab_scheme **out);
    DOFLAB_API void doflab_scheme_free(doflab_scheme *scheme);
    DOFLAB_API doflab_status doflab_scheme_predicted(const doflab_scheme *scheme, double *d1, double *d2);
    DOFLAB_API doflab_status doflab_scheme_to_json(const doflab_scheme *scheme, char **json_out);

    /* Finite-SNR rate simulation of the compiled scheme; the report (grids,
     * rates, slopes, margins) is returned as JSON. */
    DOFLAB_API doflab_status doflab_simulate(const doflab_params *params, const doflab_sim_options *options,
                                             char **report_json);

    /* Received interference power of the scheme's null-steered stream groups
     * at the receivers they avoid, with log-log fitted exponents, as JSON. */
    DOFLAB_API doflab_status doflab_interference_probe(const doflab_params *params,
                                                       const doflab_sim_options *options, char **report_json);

    /* Membership of a DoF tuple in the elevated-noise-floor MAC region:
     * transmitters k, receive antennas m, loads d[k], floor exponents
     * alpha[m]. slack must hold k entries. */
    DOFLAB_API doflab_status doflab_mac_region_check(int transmitters, int antennas, const double *dof_loads,
                                                     const double *noise_exps, int *contained, int *binding_k,
                                                     double *slack);

    /* Monte-Carlo subset-slope oracle for the MAC region, as JSON. */
    DOFLAB_API doflab_status doflab_mac_oracle(int transmitters, int antennas, const double *noise_exps,
                                               const double *p_grid, int p_count, int trials, uint64_t seed,
                                               char **report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DOFLAB_H */
