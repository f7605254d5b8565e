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
//
// End-to-end acceptance runner: one pass/fail line per criterion, nonzero
// exit when any criterion fails. Formula criteria run in-process; the
// slope, figure and determinism criteria drive the installed CLI binary.

#include "channel.hpp"
#include "dof_formula.hpp"
#include "json_io.hpp"
#include "mac_region.hpp"
#include "rate_engine.hpp"
#include "rng.hpp"
#include "scheme_builder.hpp"

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef DOFLAB_CLI_PATH
#error "DOFLAB_CLI_PATH must point at the CLI binary"
#endif

using namespace doflab;
using nlohmann::json;

namespace
{

std::filesystem::path g_workdir;

std::vector<AntennaConfig> ordered_grid(int max)
{
    std::vector<AntennaConfig> out;
    for (int m1 = 1; m1 <= max; ++m1)
        for (int m2 = 1; m2 <= max; ++m2)
            for (int n1 = 1; n1 <= max; ++n1)
                for (int n2 = n1; n2 <= max; ++n2)
                    out.push_back({m1, m2, n1, n2});
    return out;
}

int run_cli(const std::string &args)
{
    const std::string cmd = std::string("\"") + DOFLAB_CLI_PATH + "\" " + args + " > " +
                            (g_workdir / "cli.log").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status))
        return -1;
    return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Parses a small CSV with a header line into rows of doubles.
std::vector<std::vector<double>> read_csv(const std::filesystem::path &path)
{
    std::ifstream in(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line))
    {
        if (header)
        {
            header = false;
            continue;
        }
        if (line.empty())
            continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------- 1 -----

bool formula_fixtures(std::string &detail)
{
    const double tol = 1e-12;
    for (int i = 0; i <= 100; ++i)
    {
        const double b = i / 100.0;
        const auto d2 = [&](AntennaConfig cfg, CsitProfile prof) {
            return dof_user2_given_user1_max(cfg, prof).d2;
        };
        if (std::abs(d2({1, 4, 1, 3}, {b, 0, 0, 0}) - 2.0 * b) > tol)
        {
            detail = "(1,4,1,3) mismatch at beta12=" + std::to_string(b);
            return false;
        }
        if (std::abs(d2({3, 4, 1, 3}, {b, 0, 0, 0}) - std::min(2.0, 3.0 * b)) > tol)
        {
            detail = "(3,4,1,3) mismatch at beta12=" + std::to_string(b);
            return false;
        }
        if (std::abs(d2({2, 4, 1, 3}, {b, 0, 0, 0}) - std::min(1.0 + b, 3.0 * b)) > tol)
        {
            detail = "(2,4,1,3) mismatch at beta12=" + std::to_string(b);
            return false;
        }
        for (int j = 0; j <= 100; ++j)
        {
            const double b21 = j / 100.0;
            if (std::abs(d2({4, 4, 1, 3}, {b, b21, 0, 0}) - std::min(3.0 * b, 2.0 + b21)) > tol)
            {
                detail = "(4,4,1,3) mismatch at (" + std::to_string(b) + "," + std::to_string(b21) + ")";
                return false;
            }
        }
    }
    if (std::abs(dof_user2_given_user1_max({1, 4, 2, 3}, {0.5, 0, 0, 0}).d2 - 2.0) > tol)
    {
        detail = "(1,4,2,3) at beta12=1/2 is not 2";
        return false;
    }
    if (std::abs(dof_user2_given_user1_max({4, 4, 1, 3}, {5.0 / 6.0, 0.5, 0, 0}).d2 - 2.5) > tol)
    {
        detail = "(4,4,1,3) spot value at (5/6,1/2) is not 2.5";
        return false;
    }
    detail = "five fixture families over beta grid 0:0.01:1";
    return true;
}

// ---------------------------------------------------------------- 2 -----

bool closed_form_agreement(std::string &detail)
{
    int checked = 0;
    for (const AntennaConfig &cfg : ordered_grid(6))
        for (int i = 0; i <= 10; ++i)
            for (int j = 0; j <= 10; ++j)
            {
                const CsitProfile prof{i / 10.0, j / 10.0, 0, 0};
                const double direct = dof_user2_given_user1_max(cfg, prof).d2;
                const double closed = closed_form_d2(classify_case(cfg), cfg, prof);
                if (std::abs(direct - closed) > 1e-12)
                {
                    std::ostringstream msg;
                    msg << "mismatch at (" << cfg.m1 << "," << cfg.m2 << "," << cfg.n1 << "," << cfg.n2
                        << ") beta12=" << prof.beta12 << " beta21=" << prof.beta21 << ": theorem " << direct
                        << " vs closed form " << closed;
                    detail = msg.str();
                    return false;
                }
                ++checked;
            }
    detail = std::to_string(checked) + " (config, beta) tuples agree within 1e-12";
    return true;
}

// ---------------------------------------------------------------- 3 -----

bool extreme_cases(std::string &detail)
{
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const AntennaConfig &cfg : ordered_grid(6))
    {
        if (std::abs(dof_user2_given_user1_max(cfg, {1, 1, 0, 0}).d2 - term_a(cfg)) > 1e-12)
        {
            detail = "beta=1 does not recover the perfect-CSIT term";
            return false;
        }
        const double frozen = dof_user2_given_user1_max(cfg, {0, 0, 0, 0}).d2;
        for (int j = 0; j <= 10; ++j)
            if (dof_user2_given_user1_max(cfg, {0, j / 10.0, 0, 0}).d2 != frozen)
            {
                detail = "beta12=0 value moves with beta21";
                return false;
            }
        const CsitProfile base{unit(rng), unit(rng), 0, 0};
        const CsitProfile direct{base.beta12, base.beta21, unit(rng), unit(rng)};
        if (dof_user2_given_user1_max(cfg, base).d2 != dof_user2_given_user1_max(cfg, direct).d2 ||
            dof_user1_given_user2_max(cfg, base).d2 != dof_user1_given_user2_max(cfg, direct).d2)
        {
            detail = "output depends on beta11/beta22";
            return false;
        }
    }
    detail = "perfect/no-CSIT limits and direct-link independence on the full grid";
    return true;
}

// ---------------------------------------------------------------- 4 -----

bool scheme_accounting(std::string &detail)
{
    const std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0};
    int schemes = 0;
    for (const AntennaConfig &cfg : ordered_grid(6))
        for (double b12 : betas)
            for (double b21 : betas)
            {
                const CsitProfile prof{b12, b21, 0, 0};
                const SchemeSpec scheme = build_scheme(cfg, prof);
                double sum1 = 0.0, sum2 = 0.0;
                for (const StreamSpec &s : scheme.streams)
                    (s.owner == 1 ? sum1 : sum2) += s.dof_load;

                const double want1 = std::min(cfg.m1, cfg.n1);
                const double want2 = dof_user2_given_user1_max(cfg, prof).d2;
                if (std::abs(sum1 - want1) > 1e-12 || std::abs(sum2 - want2) > 1e-12 ||
                    std::abs(scheme.predicted.d1 - want1) > 1e-12 || std::abs(scheme.predicted.d2 - want2) > 1e-12)
                {
                    std::ostringstream msg;
                    msg << "DoF sums off at (" << cfg.m1 << "," << cfg.m2 << "," << cfg.n1 << "," << cfg.n2
                        << ") beta12=" << b12 << " beta21=" << b21;
                    detail = msg.str();
                    return false;
                }

                for (const StageMacView &view : stage_mac_views(scheme))
                {
                    MacInstance inst;
                    inst.transmitters = (int)view.dof_loads.size();
                    inst.antennas = view.dims;
                    inst.noise_exps = view.noise_exps;
                    inst.dof_loads = view.dof_loads;
                    if (!mac_region_contains(inst).contained)
                    {
                        std::ostringstream msg;
                        msg << "stage " << view.stage << " at receiver " << view.receiver << " of (" << cfg.m1
                            << "," << cfg.m2 << "," << cfg.n1 << "," << cfg.n2 << ") beta12=" << b12
                            << " beta21=" << b21 << " violates the MAC region";
                        detail = msg.str();
                        return false;
                    }
                }
                ++schemes;
            }
    detail = std::to_string(schemes) + " schemes balance their DoF and every stage fits the MAC region";
    return true;
}

// ---------------------------------------------------------------- 5 -----

bool lemma_oracle(std::string &detail)
{
    std::mt19937_64 rng(20260501);
    std::uniform_int_distribution<int> dims(1, 4);
    std::uniform_int_distribution<int> quarter(0, 4);
    const std::vector<double> grid{1e6, 1e8, 1e10};

    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
    {
        const int k = dims(rng), m = dims(rng);
        std::vector<double> alpha(m);
        for (double &a : alpha)
            a = quarter(rng) / 4.0;
        const auto slopes = mac_mi_slope_oracle(k, m, alpha, grid, 50, derive_seed(555, i));
        for (const SubsetSlope &s : slopes)
        {
            const double gap = std::abs(s.slope - s.predicted);
            worst = std::max(worst, gap);
            if (gap > 0.05)
            {
                std::ostringstream msg;
                msg << "subset mask " << s.subset_mask << " of K=" << k << " M=" << m << " drifts by " << gap;
                detail = msg.str();
                return false;
            }
        }
    }
    std::ostringstream msg;
    msg << "20 random instances, worst subset-slope gap " << worst;
    detail = msg.str();
    return true;
}

// ---------------------------------------------------------------- 6 -----

bool end_to_end_slopes(std::string &detail)
{
    struct Example
    {
        const char *args;
        double d2;
    };
    const std::vector<Example> examples{
        {"--m1 1 --m2 4 --n1 1 --n2 3 --beta12 0.5", 1.0},
        {"--m1 3 --m2 4 --n1 1 --n2 3 --beta12 0.666666666666666667", 2.0},
        {"--m1 2 --m2 4 --n1 1 --n2 3 --beta12 0.75", 1.75},
        {"--m1 1 --m2 4 --n1 2 --n2 3 --beta12 0.5", 2.0},
        {"--m1 4 --m2 4 --n1 1 --n2 3 --beta12 0.833333333333333333 --beta21 0.5", 2.5},
    };

    std::ostringstream summary;
    for (std::size_t i = 0; i < examples.size(); ++i)
    {
        const auto report_path = g_workdir / ("slope_" + std::to_string(i) + ".json");
        const std::string args = std::string("simulate ") + examples[i].args +
                                 " --p-grid 1e6,1e8,1e10 --trials 50 --seed 20241 --out " + report_path.string();
        const int code = run_cli(args);
        if (code != 0)
        {
            detail = "cmd_simulate exited " + std::to_string(code) + " for: " + examples[i].args;
            return false;
        }
        const json report = json::parse(slurp(report_path));
        const double s1 = report.at("headline_slope1").get<double>();
        const double s2 = report.at("headline_slope2").get<double>();
        if (std::abs(s1 - 1.0) > 0.1 || std::abs(s2 - examples[i].d2) > 0.1)
        {
            std::ostringstream msg;
            msg << "slopes (" << s1 << "," << s2 << ") miss (1," << examples[i].d2 << ") for " << examples[i].args;
            detail = msg.str();
            return false;
        }
        summary << (i ? ", " : "") << "(" << s1 << "," << s2 << ")";
    }
    detail = "cmd_simulate slopes " + summary.str();
    return true;
}

// ---------------------------------------------------------------- 7 -----

bool interference_floor(std::string &detail)
{
    const std::vector<double> grid{1e4, 1e6, 1e8, 1e10};
    std::ostringstream summary;

    const auto configs = {std::pair{AntennaConfig{1, 4, 1, 3}, 0.7}, std::pair{AntennaConfig{3, 4, 1, 3}, 2.0 / 3.0}};
    for (const auto &[cfg, beta] : configs)
    {
        const SchemeSpec scheme = build_scheme(cfg, {beta, 0, 0, 0});
        const auto fits = interference_floor_probe(scheme, grid, 50, 909);
        if (fits.empty())
        {
            detail = "expected private streams to probe";
            return false;
        }
        for (const FloorFit &fit : fits)
        {
            if (fit.exponent > 0.05)
            {
                std::ostringstream msg;
                msg << "floor exponent " << fit.exponent << " above 0.05 at (" << cfg.m1 << "," << cfg.m2 << ","
                    << cfg.n1 << "," << cfg.n2 << ")";
                detail = msg.str();
                return false;
            }
            summary << " " << fit.exponent;
        }
    }

    // negative control: mis-set the private transmit exponent to beta12+0.3
    SchemeSpec rigged = build_scheme({1, 4, 1, 3}, {0.7, 0, 0, 0});
    for (StreamSpec &s : rigged.streams)
        if (s.precoder == PrecoderKind::NullOfCross)
            s.power_exp = 0.7 + 0.3;
    const auto rigged_fits = interference_floor_probe(rigged, grid, 50, 909);
    for (const FloorFit &fit : rigged_fits)
        if (fit.exponent < 0.2)
        {
            std::ostringstream msg;
            msg << "negative control not detected: fitted exponent " << fit.exponent << " below 0.2";
            detail = msg.str();
            return false;
        }

    detail = "fitted exponents" + summary.str() + "; rigged control detected at " +
             std::to_string(rigged_fits.front().exponent);
    return true;
}

// ---------------------------------------------------------------- 8 -----

bool figure_reproduction(std::string &detail)
{
    const auto dir = g_workdir / "figs";
    if (run_cli("figures --out " + dir.string()) != 0)
    {
        detail = "cmd_figures failed";
        return false;
    }
    const auto fig4 = read_csv(dir / "fig4.csv");
    const auto fig6 = read_csv(dir / "fig6.csv");
    if (fig4.size() != 101 || fig6.size() != 101)
    {
        detail = "expected 101 grid rows per figure";
        return false;
    }

    const auto d2 = [](AntennaConfig cfg, double beta) {
        return dof_user2_given_user1_max(cfg, {beta, 0, 0, 0}).d2;
    };
    for (int i = 0; i <= 100; ++i)
    {
        const double b = i / 100.0;
        const std::vector<double> want4{b, std::min(2.0 * b, 2.0), std::min(1.0 + b, 3.0 * b),
                                        std::min(2.0, 3.0 * b)};
        const std::vector<double> want6{b, std::min(1.0 + b, 2.0), std::min(2.0, 1.0 + 2.0 * b)};
        for (int c = 0; c < 4; ++c)
            if (std::abs(fig4[i][c] - want4[c]) > 1e-12)
            {
                detail = "fig4.csv row " + std::to_string(i) + " column " + std::to_string(c) + " off";
                return false;
            }
        for (int c = 0; c < 3; ++c)
            if (std::abs(fig6[i][c] - want6[c]) > 1e-12)
            {
                detail = "fig6.csv row " + std::to_string(i) + " column " + std::to_string(c) + " off";
                return false;
            }
        // the files must equal the formula module point for point as well
        if (std::abs(fig4[i][1] - d2({1, 4, 1, 3}, b)) > 1e-12 ||
            std::abs(fig4[i][2] - d2({2, 4, 1, 3}, b)) > 1e-12 ||
            std::abs(fig4[i][3] - d2({3, 4, 1, 3}, b)) > 1e-12 ||
            std::abs(fig6[i][1] - d2({1, 3, 2, 3}, b)) > 1e-12 ||
            std::abs(fig6[i][2] - d2({1, 4, 2, 3}, b)) > 1e-12)
        {
            detail = "figure row " + std::to_string(i) + " disagrees with the formula module";
            return false;
        }
    }

    // spot rows: beta=2/3 for fig4 curves, beta=1/2 for fig6 curves
    const double two_thirds = 2.0 / 3.0;
    if (std::abs(d2({1, 4, 1, 3}, two_thirds) - 4.0 / 3.0) > 1e-12 ||
        std::abs(d2({2, 4, 1, 3}, two_thirds) - 5.0 / 3.0) > 1e-12 ||
        std::abs(d2({3, 4, 1, 3}, two_thirds) - 2.0) > 1e-12)
    {
        detail = "fig4 spot values at beta=2/3 are not (4/3, 5/3, 2)";
        return false;
    }
    if (std::abs(fig6[50][1] - 1.5) > 1e-12 || std::abs(fig6[50][2] - 2.0) > 1e-12)
    {
        detail = "fig6 spot row at beta=1/2 is not (1.5, 2.0)";
        return false;
    }
    detail = "101 rows per curve match the closed forms; spot rows verified";
    return true;
}

// ---------------------------------------------------------------- 9 -----

bool determinism(std::string &detail)
{
    const std::string base = "simulate --m1 3 --m2 4 --n1 1 --n2 3 --beta12 0.666666666666666667 "
                             "--p-grid 1e6,1e8,1e10 --trials 40 --seed 4242 --out ";
    const auto once = g_workdir / "det_a.json";
    const auto twice = g_workdir / "det_b.json";

    setenv("DOF_LAB_THREADS", "1", 1);
    if (run_cli(base + once.string()) != 0)
    {
        detail = "first cmd_simulate run failed";
        return false;
    }
    setenv("DOF_LAB_THREADS", "4", 1);
    if (run_cli(base + twice.string()) != 0)
    {
        detail = "second cmd_simulate run failed";
        return false;
    }
    unsetenv("DOF_LAB_THREADS");
    if (slurp(once) != slurp(twice) || slurp(once).empty())
    {
        detail = "cmd_simulate reports differ across parallelism levels";
        return false;
    }

    const std::vector<double> grid{1e6, 1e8, 1e10};
    const auto a = estimate_dof_slopes({4, 4, 1, 3}, {5.0 / 6.0, 0.5, 0, 0}, grid, 25, 99, 1);
    const auto b = estimate_dof_slopes({4, 4, 1, 3}, {5.0 / 6.0, 0.5, 0, 0}, grid, 25, 99, 3);
    if (slope_report_to_json(a).dump() != slope_report_to_json(b).dump())
    {
        detail = "engine reports differ between 1 and 3 threads";
        return false;
    }
    detail = "byte-identical reports at 1 vs 4 CLI threads and 1 vs 3 engine threads";
    return true;
}

} // namespace

int main()
{
    g_workdir = std::filesystem::temp_directory_path() /
                ("doflab_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(g_workdir);

    struct Criterion
    {
        const char *name;
        std::function<bool(std::string &)> run;
    };
    const std::vector<Criterion> criteria{
        {"formula fixtures", formula_fixtures},
        {"closed-form/theorem agreement", closed_form_agreement},
        {"extreme-case consistency", extreme_cases},
        {"scheme DoF accounting", scheme_accounting},
        {"MAC region MI oracle", lemma_oracle},
        {"end-to-end slope verification", end_to_end_slopes},
        {"interference-floor property", interference_floor},
        {"figure reproduction", figure_reproduction},
        {"determinism", determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        std::string detail;
        bool ok = false;
        try
        {
            ok = criteria[i].run(detail);
        }
        catch (const std::exception &e)
        {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << (i + 1) << ": " << criteria[i].name << " — "
                  << detail << "\n";
        failures += ok ? 0 : 1;
    }

    std::error_code ec;
    std::filesystem::remove_all(g_workdir, ec);

    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << (criteria.size() - failures)
              << "/" << criteria.size() << " criteria)\n";
    return failures == 0 ? 0 : 1;
}
