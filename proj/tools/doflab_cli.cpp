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
// Command-line front end. Talks to the library exclusively through the C
// API in doflab.h; result JSON is reshaped here for files and summaries.

#include "doflab.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace
{

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

constexpr double kSlopeTolerance = 0.1;
constexpr double kFloorExponentTolerance = 0.05;

// Grid spec: either a comma list ("1e6,1e8,1e10") or "start:step:end".
std::vector<double> parse_grid(const std::string &text)
{
    std::vector<double> out;
    const auto parse_one = [](const std::string &s) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw CLI::ValidationError("grid", "bad number '" + s + "'");
        return v;
    };

    if (text.find(':') != std::string::npos)
    {
        const auto first = text.find(':');
        const auto second = text.find(':', first + 1);
        if (second == std::string::npos)
            throw CLI::ValidationError("grid", "expected start:step:end");
        const double start = parse_one(text.substr(0, first));
        const double step = parse_one(text.substr(first + 1, second - first - 1));
        const double end = parse_one(text.substr(second + 1));
        if (!(step > 0.0))
            throw CLI::ValidationError("grid", "step must be positive");
        for (int i = 0;; ++i)
        {
            const double v = start + i * step;
            if (v > end + 1e-12)
                break;
            out.push_back(std::min(v, end));
        }
        return out;
    }

    std::size_t pos = 0;
    while (pos <= text.size())
    {
        const auto comma = text.find(',', pos);
        const auto piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!piece.empty())
            out.push_back(parse_one(piece));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.empty())
        throw CLI::ValidationError("grid", "empty grid");
    return out;
}

// 6 significant digits, '.' decimal point, no separators.
std::string fmt6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Loads a plain key=value config file as a flag list ("--key value ...").
// Injected ahead of the command-line flags, so explicit flags win.
std::vector<std::string> config_file_args(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("--config", "cannot read " + path);
    std::vector<std::string> args;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#')
            continue;
        const auto eq = line.find('=', begin);
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config",
                                       path + ":" + std::to_string(lineno) + ": expected key=value");
        const auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(begin, eq - begin));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw CLI::ValidationError("--config",
                                       path + ":" + std::to_string(lineno) + ": empty key");
        args.push_back("--" + key);
        if (!value.empty())
            args.push_back(value);
    }
    return args;
}

// Later occurrences of a flag override earlier ones everywhere; required for
// the config-then-flags layering.
void take_last_everywhere(CLI::App *app)
{
    for (CLI::Option *opt : app->get_options())
        if (opt->get_expected_min() > 0)
            opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    for (CLI::App *sub : app->get_subcommands({}))
        take_last_everywhere(sub);
}

std::unique_ptr<char, decltype(&doflab_string_free)> take_string(char *raw)
{
    return {raw, &doflab_string_free};
}

int report_api_error(const std::string &what, doflab_status status)
{
    std::cerr << "error: " << what << ": " << doflab_status_name(status) << " (" << doflab_last_error() << ")\n";
    return status == DOFLAB_ERR_INVALID_ARGUMENT || status == DOFLAB_ERR_NULL_POINTER ||
                   status == DOFLAB_ERR_RELABEL_REQUIRED
               ? kExitUsage
               : kExitVerificationFailure;
}

bool write_text_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        return false;
    out << text;
    return out.good();
}

struct ChannelArgs
{
    doflab_params params{1, 1, 1, 1, 0.0, 0.0, 0.0, 0.0};

    void attach(CLI::App *cmd, bool antennas_required)
    {
        auto *m1 = cmd->add_option("--m1", params.m1, "Antennas at transmitter 1");
        auto *m2 = cmd->add_option("--m2", params.m2, "Antennas at transmitter 2");
        auto *n1 = cmd->add_option("--n1", params.n1, "Antennas at receiver 1");
        auto *n2 = cmd->add_option("--n2", params.n2, "Antennas at receiver 2");
        if (antennas_required)
        {
            m1->required();
            m2->required();
            n1->required();
            n2->required();
        }
        cmd->add_option("--beta12", params.beta12, "CSIT exponent of cross link rx1<-tx2");
        cmd->add_option("--beta21", params.beta21, "CSIT exponent of cross link rx2<-tx1");
        cmd->add_option("--beta11", params.beta11, "CSIT exponent of direct link rx1<-tx1 (recorded only)");
        cmd->add_option("--beta22", params.beta22, "CSIT exponent of direct link rx2<-tx2 (recorded only)");
    }
};

struct SimArgs
{
    std::string p_grid_text = "1e6,1e8,1e10";
    int trials = 50;
    std::uint64_t seed = 1;
    int threads = 0;

    void attach(CLI::App *cmd)
    {
        cmd->add_option("--p-grid", p_grid_text, "Power grid, comma list")->capture_default_str();
        cmd->add_option("--trials", trials, "Monte-Carlo trials per grid point")->capture_default_str();
        cmd->add_option("--seed", seed, "Master seed")->envname("DOF_LAB_SEED")->capture_default_str();
    }
};

const char *case_name(doflab_case c)
{
    switch (c)
    {
    case DOFLAB_CASE_1_TRIVIAL:
        return "Case1Trivial";
    case DOFLAB_CASE_1:
        return "Case1";
    case DOFLAB_CASE_2:
        return "Case2";
    case DOFLAB_CASE_3:
        return "Case3";
    case DOFLAB_CASE_4:
        return "Case4";
    }
    return "?";
}

// ----------------------------------------------------------------- dof ---

int run_dof(const ChannelArgs &ch, const std::string &beta_grid_text, const std::string &out_path,
            const std::string &format)
{
    doflab_params params = ch.params;
    if (doflab_status s = doflab_validate(&params); s != DOFLAB_OK)
        return report_api_error("validate", s);

    doflab_dof_breakdown corner2{}, corner1{};
    if (doflab_status s = doflab_dof_user2(&params, &corner2); s != DOFLAB_OK)
        return report_api_error("dof evaluation", s);
    if (doflab_status s = doflab_dof_user1(&params, &corner1); s != DOFLAB_OK)
        return report_api_error("dof evaluation", s);

    const bool ordered = params.n1 <= params.n2;
    const double d1_max = std::min(params.m1, params.n1);
    const double d2_max = std::min(params.m2, params.n2);

    std::cout << "config (m1,m2,n1,n2) = (" << params.m1 << "," << params.m2 << "," << params.n1 << ","
              << params.n2 << ")  beta12=" << fmt6(params.beta12) << " beta21=" << fmt6(params.beta21) << "\n";

    json report;
    report["config"] = {{"m1", params.m1}, {"m2", params.m2}, {"n1", params.n1}, {"n2", params.n2}};
    report["csit"] = {{"beta12", params.beta12},
                      {"beta21", params.beta21},
                      {"beta11", params.beta11},
                      {"beta22", params.beta22}};

    if (ordered)
    {
        doflab_case label{};
        if (doflab_status s = doflab_classify(&params, &label); s != DOFLAB_OK)
            return report_api_error("classify", s);
        double bar12 = 0.0, bar21 = 0.0;
        int bar12_defined = 0;
        if (doflab_status s = doflab_beta_bars(&params, &bar12, &bar12_defined, &bar21); s != DOFLAB_OK)
            return report_api_error("beta bars", s);

        std::cout << "case: " << case_name(label) << "\n";
        std::cout << "beta_bar12: " << (bar12_defined ? fmt6(bar12) : std::string("n/a"))
                  << "  beta_bar21: " << fmt6(bar21) << "\n";
        report["case"] = case_name(label);
        report["beta_bar12"] = bar12_defined ? json(bar12) : json(nullptr);
        report["beta_bar21"] = bar21;
    }
    else
    {
        // The case partition and schemes assume n1 <= n2; the corner values
        // below still evaluate the formula as stated.
        std::cout << "case: n/a (n1 > n2; formula-as-stated, swap users for schemes)\n";
        report["case"] = nullptr;
        report["formula_as_stated"] = true;
    }

    std::cout << "corner user1 max: d1=" << fmt6(d1_max) << " d2=" << fmt6(corner2.dof) << "  [A="
              << fmt6(corner2.term_a) << " B=" << fmt6(corner2.term_b) << " C=" << fmt6(corner2.term_c) << "]\n";
    std::cout << "corner user2 max: d2=" << fmt6(d2_max) << " d1=" << fmt6(corner1.dof) << "  [A="
              << fmt6(corner1.term_a) << " B=" << fmt6(corner1.term_b) << " C=" << fmt6(corner1.term_c) << "]\n";

    report["corner_user1_max"] = {{"d1", d1_max},
                                  {"d2", corner2.dof},
                                  {"term_a", corner2.term_a},
                                  {"term_b", corner2.term_b},
                                  {"term_c", corner2.term_c}};
    report["corner_user2_max"] = {{"d2", d2_max},
                                  {"d1", corner1.dof},
                                  {"term_a", corner1.term_a},
                                  {"term_b", corner1.term_b},
                                  {"term_c", corner1.term_c}};

    std::optional<std::vector<std::pair<double, double>>> sweep;
    if (!beta_grid_text.empty())
    {
        const std::vector<double> grid = parse_grid(beta_grid_text);
        std::vector<double> d2(grid.size());
        if (doflab_status s = doflab_sweep_beta(&params, 12, grid.data(), (int)grid.size(), d2.data());
            s != DOFLAB_OK)
            return report_api_error("sweep", s);
        sweep.emplace();
        json rows = json::array();
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            sweep->emplace_back(grid[i], d2[i]);
            rows.push_back({{"beta12", grid[i]}, {"d2", d2[i]}});
        }
        report["sweep_beta12"] = rows;
    }

    if (!out_path.empty())
    {
        std::string text;
        if (format == "csv")
        {
            text = "beta12,d2\n";
            if (sweep)
                for (const auto &[b, d] : *sweep)
                    text += fmt6(b) + "," + fmt6(d) + "\n";
            else
                text = "d1,d2,term_a,term_b,term_c\n" + fmt6(d1_max) + "," + fmt6(corner2.dof) + "," +
                       fmt6(corner2.term_a) + "," + fmt6(corner2.term_b) + "," + fmt6(corner2.term_c) + "\n";
        }
        else
        {
            text = report.dump(2) + "\n";
        }
        if (!write_text_file(out_path, text))
        {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitVerificationFailure;
        }
    }
    return kExitPass;
}

// ------------------------------------------------------------- figures ---

int run_figures(const std::string &out_dir)
{
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i)
        grid.push_back(i / 100.0);

    const auto sweep_curve = [&](doflab_params params) {
        std::vector<double> d2(grid.size());
        const doflab_status s = doflab_sweep_beta(&params, 12, grid.data(), (int)grid.size(), d2.data());
        if (s != DOFLAB_OK)
            throw std::runtime_error(std::string("sweep failed: ") + doflab_last_error());
        return d2;
    };

    // User-2 DoF against beta12 for (m2,n1,n2) = (4,1,3) at m1 = 1,2,3.
    std::string fig4 = "beta12,d2_M1eq1,d2_M1eq2,d2_M1eq3\n";
    std::vector<std::vector<double>> fig4_curves;
    for (int m1 : {1, 2, 3})
        fig4_curves.push_back(sweep_curve({m1, 4, 1, 3, 0.0, 0.0, 0.0, 0.0}));
    for (std::size_t i = 0; i < grid.size(); ++i)
        fig4 += fmt6(grid[i]) + "," + fmt6(fig4_curves[0][i]) + "," + fmt6(fig4_curves[1][i]) + "," +
                fmt6(fig4_curves[2][i]) + "\n";

    // User-2 DoF against beta12 for (m1,n1,n2) = (1,2,3) at m2 = 3,4.
    std::string fig6 = "beta12,d2_M2eq3,d2_M2eq4\n";
    std::vector<std::vector<double>> fig6_curves;
    for (int m2 : {3, 4})
        fig6_curves.push_back(sweep_curve({1, m2, 2, 3, 0.0, 0.0, 0.0, 0.0}));
    for (std::size_t i = 0; i < grid.size(); ++i)
        fig6 += fmt6(grid[i]) + "," + fmt6(fig6_curves[0][i]) + "," + fmt6(fig6_curves[1][i]) + "\n";

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const auto fig4_path = (std::filesystem::path(out_dir) / "fig4.csv").string();
    const auto fig6_path = (std::filesystem::path(out_dir) / "fig6.csv").string();
    if (!write_text_file(fig4_path, fig4) || !write_text_file(fig6_path, fig6))
    {
        std::cerr << "error: cannot write figure files under " << out_dir << "\n";
        return kExitVerificationFailure;
    }
    std::cout << "wrote " << fig4_path << " and " << fig6_path << "\n";
    return kExitPass;
}

// ------------------------------------------------------------ simulate ---

int run_simulate(const ChannelArgs &ch, const SimArgs &sim, const std::string &out_path, const std::string &format)
{
    doflab_params params = ch.params;
    if (doflab_status s = doflab_validate(&params); s != DOFLAB_OK)
        return report_api_error("validate", s);

    const std::vector<double> p_grid = parse_grid(sim.p_grid_text);
    if (sim.trials < 10)
    {
        std::cerr << "error: --trials must be at least 10\n";
        return kExitUsage;
    }

    doflab_sim_options options{p_grid.data(), (int)p_grid.size(), sim.trials, sim.seed, sim.threads};

    char *raw_report = nullptr;
    if (doflab_status s = doflab_simulate(&params, &options, &raw_report); s != DOFLAB_OK)
        return report_api_error("simulate", s);
    const auto report_text = take_string(raw_report);
    json report = json::parse(report_text.get());

    char *raw_floors = nullptr;
    if (doflab_status s = doflab_interference_probe(&params, &options, &raw_floors); s != DOFLAB_OK)
        return report_api_error("interference probe", s);
    const auto floors_text = take_string(raw_floors);
    report["floors"] = json::parse(floors_text.get());

    const double predicted_d1 = report["predicted"]["d1"].get<double>();
    const double predicted_d2 = report["predicted"]["d2"].get<double>();
    const double slope1 = report["headline_slope1"].get<double>();
    const double slope2 = report["headline_slope2"].get<double>();
    const bool infeasible = report["scheme_infeasible"].get<bool>();

    bool floors_flat = true;
    for (const json &fit : report["floors"])
        floors_flat = floors_flat && fit["exponent"].get<double>() <= kFloorExponentTolerance;

    const bool slopes_ok =
        std::abs(slope1 - predicted_d1) <= kSlopeTolerance && std::abs(slope2 - predicted_d2) <= kSlopeTolerance;

    std::cout << "predicted DoF: (" << fmt6(predicted_d1) << ", " << fmt6(predicted_d2) << ")\n";
    std::cout << "headline slopes: (" << fmt6(slope1) << ", " << fmt6(slope2) << ")\n";
    std::cout << "min stage margin at largest P: " << fmt6(report["min_margin_at_pmax"].get<double>()) << "\n";
    std::cout << "floor exponents:";
    for (const json &fit : report["floors"])
        std::cout << " " << fmt6(fit["exponent"].get<double>());
    if (report["floors"].empty())
        std::cout << " (no private streams)";
    std::cout << "\n";

    if (!out_path.empty())
    {
        std::string text;
        if (format == "csv")
        {
            text = "P,rate_user1,rate_user2,min_margin\n";
            for (std::size_t i = 0; i < report["p_grid"].size(); ++i)
                text += fmt6(report["p_grid"][i].get<double>()) + "," +
                        fmt6(report["rate_user1"][i].get<double>()) + "," +
                        fmt6(report["rate_user2"][i].get<double>()) + "," +
                        fmt6(report["min_margin"][i].get<double>()) + "\n";
        }
        else
        {
            text = report.dump(2) + "\n";
        }
        if (!write_text_file(out_path, text))
        {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitVerificationFailure;
        }
    }

    if (infeasible)
    {
        std::cout << "FAIL (scheme-infeasible: stage margin below -0.25 at largest P)\n";
        return kExitVerificationFailure;
    }
    if (!slopes_ok || !floors_flat)
    {
        std::cout << "FAIL (" << (!slopes_ok ? "slope mismatch" : "interference floor not flat") << ")\n";
        return kExitVerificationFailure;
    }
    std::cout << "PASS\n";
    return kExitPass;
}

// ----------------------------------------------------------- mac-check ---

int run_mac_check(int transmitters, int antennas, const std::string &dof_text, const std::string &alpha_text,
                  bool oracle, const SimArgs &sim, const std::string &out_path)
{
    const std::vector<double> dof = parse_grid(dof_text);
    const std::vector<double> alpha = parse_grid(alpha_text);
    if ((int)dof.size() != transmitters || (int)alpha.size() != antennas)
    {
        std::cerr << "error: --dof needs " << transmitters << " values and --alpha " << antennas << "\n";
        return kExitUsage;
    }

    int contained = 0, binding_k = 0;
    std::vector<double> slack(transmitters, 0.0);
    if (doflab_status s = doflab_mac_region_check(transmitters, antennas, dof.data(), alpha.data(), &contained,
                                                  &binding_k, slack.data());
        s != DOFLAB_OK)
        return report_api_error("mac region check", s);

    json report = {{"contained", contained != 0}, {"binding_k", binding_k}, {"slack", slack}};
    std::cout << (contained ? "contained" : "not contained") << ", binding k=" << binding_k << ", slack:";
    for (double v : slack)
        std::cout << " " << fmt6(v);
    std::cout << "\n";

    bool oracle_ok = true;
    if (oracle)
    {
        const std::vector<double> p_grid = parse_grid(sim.p_grid_text);
        char *raw = nullptr;
        if (doflab_status s = doflab_mac_oracle(transmitters, antennas, alpha.data(), p_grid.data(),
                                                (int)p_grid.size(), sim.trials, sim.seed, &raw);
            s != DOFLAB_OK)
            return report_api_error("mac oracle", s);
        const auto text = take_string(raw);
        report["oracle"] = json::parse(text.get());

        double worst = 0.0;
        for (const json &entry : report["oracle"])
        {
            const double gap = std::abs(entry["slope"].get<double>() - entry["predicted"].get<double>());
            worst = std::max(worst, gap);
        }
        report["oracle_worst_gap"] = worst;
        oracle_ok = worst <= 0.05;
        std::cout << "oracle worst slope gap: " << fmt6(worst) << (oracle_ok ? " (ok)" : " (MISMATCH)") << "\n";
    }

    if (!out_path.empty() && !write_text_file(out_path, report.dump(2) + "\n"))
    {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitVerificationFailure;
    }
    return oracle_ok ? kExitPass : kExitVerificationFailure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"dof-lab: achievable DoF of the 2-user MIMO interference channel under partial CSIT"};
    app.require_subcommand(1);

    // dof
    auto *dof_cmd = app.add_subcommand("dof", "Evaluate the corner-point DoF formula");
    ChannelArgs dof_ch;
    dof_ch.attach(dof_cmd, true);
    std::string dof_beta_grid, dof_out, dof_format = "json";
    dof_cmd->add_option("--beta-grid", dof_beta_grid, "Also sweep beta12 over this grid (comma or start:step:end)");
    dof_cmd->add_option("--out", dof_out, "Write a machine-readable report here");
    dof_cmd->add_option("--format", dof_format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // figures
    auto *fig_cmd = app.add_subcommand("figures", "Emit fig4.csv / fig6.csv reproduction data");
    std::string fig_out = ".";
    fig_cmd->add_option("--out", fig_out, "Output directory")->capture_default_str();

    // simulate
    auto *sim_cmd = app.add_subcommand("simulate", "Finite-SNR slope verification of the compiled scheme");
    ChannelArgs sim_ch;
    sim_ch.attach(sim_cmd, true);
    SimArgs sim_args;
    sim_args.attach(sim_cmd);
    std::string sim_out = "slope_report.json", sim_format = "json";
    sim_cmd->add_option("--out", sim_out, "Report file path")->capture_default_str();
    sim_cmd->add_option("--format", sim_format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // mac-check
    auto *mac_cmd = app.add_subcommand("mac-check", "Check a DoF tuple against the elevated-floor MAC region");
    int mac_k = 1, mac_m = 1;
    std::string mac_dof = "1", mac_alpha = "0", mac_out;
    bool mac_oracle = false;
    SimArgs mac_sim;
    mac_cmd->add_option("-K,--transmitters", mac_k, "Number of single-antenna transmitters")->required();
    mac_cmd->add_option("-M,--antennas", mac_m, "Receive antennas")->required();
    mac_cmd->add_option("--dof", mac_dof, "Comma list of DoF loads (K values)")->required();
    mac_cmd->add_option("--alpha", mac_alpha, "Comma list of noise-floor exponents (M values)")->required();
    mac_cmd->add_flag("--oracle", mac_oracle, "Cross-check against the Monte-Carlo MI slope oracle");
    mac_sim.attach(mac_cmd);
    mac_cmd->add_option("--out", mac_out, "Write the JSON report here");

    // Optional key=value defaults file; explicit flags always win.
    std::string config_path;
    for (CLI::App *sub : {dof_cmd, fig_cmd, sim_cmd, mac_cmd})
        sub->add_option("--config", config_path, "Plain key=value defaults file (flags override)");
    take_last_everywhere(&app);

    try
    {
        std::vector<std::string> args(argv + 1, argv + argc);
        for (std::size_t i = 0; i < args.size(); ++i)
        {
            std::string path;
            if (args[i] == "--config" && i + 1 < args.size())
                path = args[i + 1];
            else if (args[i].rfind("--config=", 0) == 0)
                path = args[i].substr(9);
            if (!path.empty())
            {
                // keys become flags placed right after the subcommand token
                const auto injected = config_file_args(path);
                args.insert(args.begin() + 1, injected.begin(), injected.end());
                break;
            }
        }
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    }
    catch (const CLI::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        if (dof_cmd->parsed())
            return run_dof(dof_ch, dof_beta_grid, dof_out, dof_format);
        if (fig_cmd->parsed())
            return run_figures(fig_out);
        if (sim_cmd->parsed())
            return run_simulate(sim_ch, sim_args, sim_out, sim_format);
        if (mac_cmd->parsed())
            return run_mac_check(mac_k, mac_m, mac_dof, mac_alpha, mac_oracle, mac_sim, mac_out);
    }
    catch (const CLI::ValidationError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
