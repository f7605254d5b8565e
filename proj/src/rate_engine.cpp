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

#include "rate_engine.hpp"

#include "rng.hpp"
#include "scheme_builder.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace doflab
{

namespace
{

int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("DOF_LAB_THREADS"))
    {
        const int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return (int)std::clamp(hw, 1u, 8u);
}

// Runs fn(i) for i in [0, n). Workers own disjoint index ranges and must
// write only to per-index slots, which keeps results independent of the
// thread count.
void parallel_for(int n, int threads, const std::function<void(int)> &fn)
{
    threads = std::max(1, std::min(threads, n));
    if (threads == 1)
    {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run_range = [&](int begin, int end) {
        try
        {
            for (int i = begin; i < end; ++i)
                fn(i);
        }
        catch (...)
        {
            std::lock_guard lock(error_mutex);
            if (!first_error)
                first_error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    const int chunk = (n + threads - 1) / threads;
    for (int t = 1; t < threads; ++t)
    {
        const int begin = t * chunk;
        if (begin < n)
            pool.emplace_back(run_range, begin, std::min(n, begin + chunk));
    }
    run_range(0, std::min(n, chunk));
    for (auto &th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

// Squared amplitude c^2 * P^gamma per stream. The scaling constant of a
// power class with n streams is 1/sqrt(2n), which keeps the per-transmitter
// total below P (at most two classes per transmitter, each at most P/2).
std::vector<double> stream_amplitudes_sq(const SchemeSpec &scheme, double power)
{
    std::map<std::pair<int, double>, int> class_sizes;
    for (const StreamSpec &s : scheme.streams)
        class_sizes[{s.owner, s.power_exp}]++;

    std::vector<double> amp2(scheme.streams.size());
    for (std::size_t i = 0; i < scheme.streams.size(); ++i)
    {
        const StreamSpec &s = scheme.streams[i];
        const double c2 = 1.0 / (2.0 * class_sizes[{s.owner, s.power_exp}]);
        amp2[i] = c2 * std::pow(power, s.power_exp);
    }
    return amp2;
}

// Orthonormal basis of the orthogonal complement of the given received
// directions (full receiver space when there are none).
Eigen::MatrixXcd complement_basis(const std::vector<Eigen::VectorXcd> &dirs, int dim)
{
    if (dirs.empty())
        return Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd a(dim, (Eigen::Index)dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i)
        a.col((Eigen::Index)i) = dirs[i];
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
    return q.rightCols(dim - (Eigen::Index)dirs.size());
}

} // namespace

std::vector<StageMargin> stage_margins(const SchemeSpec &scheme, const ChannelSet &channels,
                                       const std::vector<Eigen::VectorXcd> &precoders)
{
    if (precoders.size() != scheme.streams.size())
        throw std::invalid_argument("stage_margins: one precoder per stream required");

    const double power = channels.power;
    const double log2p = std::log2(power);
    const std::vector<double> amp2 = stream_amplitudes_sq(scheme, power);

    // Received direction of every stream at both receivers (true channel;
    // receivers have full CSIR).
    std::array<std::vector<Eigen::VectorXcd>, 2> rx_dirs;
    for (int rx = 1; rx <= 2; ++rx)
    {
        rx_dirs[rx - 1].reserve(scheme.streams.size());
        for (std::size_t s = 0; s < scheme.streams.size(); ++s)
            rx_dirs[rx - 1].push_back(channels.actual(rx, scheme.streams[s].owner) * precoders[s]);
    }

    std::vector<StageMargin> out;
    for (const DecodePlan &plan : scheme.plans)
    {
        const int rx = plan.receiver;
        const int dim = rx == 1 ? scheme.config.n1 : scheme.config.n2;
        const auto &dirs = rx_dirs[rx - 1];

        for (int si = 0; si < (int)plan.stages.size(); ++si)
        {
            const DecodeStage &stage = plan.stages[si];
            if ((int)stage.zero_force.size() >= dim)
                throw std::invalid_argument("stage_margins: zero-forced subspace exceeds the receiver dimension");
            if (stage.decode_jointly.size() > 20)
                throw std::invalid_argument("stage_margins: joint set too large for subset enumeration");

            std::vector<Eigen::VectorXcd> zf_dirs;
            for (int s : stage.zero_force)
                zf_dirs.push_back(dirs[s]);
            const Eigen::MatrixXcd basis = complement_basis(zf_dirs, dim);
            const Eigen::Index m = basis.cols();

            Eigen::MatrixXcd noise = Eigen::MatrixXcd::Identity(m, m);
            for (int s : stage.treat_as_noise)
            {
                const Eigen::VectorXcd eff = basis.adjoint() * dirs[s];
                noise += amp2[s] * eff * eff.adjoint();
            }

            std::vector<Eigen::VectorXcd> eff_deco;
            eff_deco.reserve(stage.decode_jointly.size());
            for (int s : stage.decode_jointly)
                eff_deco.push_back(basis.adjoint() * dirs[s]);

            StageMargin record;
            record.receiver = rx;
            record.stage = si;
            record.min_margin = std::numeric_limits<double>::infinity();

            const std::uint32_t full = (1u << stage.decode_jointly.size()) - 1u;
            for (std::uint32_t mask = 1; mask <= full; ++mask)
            {
                Eigen::MatrixXcd sig = Eigen::MatrixXcd::Zero(m, m);
                double target = 0.0;
                for (std::size_t i = 0; i < stage.decode_jointly.size(); ++i)
                    if (mask & (1u << i))
                    {
                        sig += amp2[stage.decode_jointly[i]] * eff_deco[i] * eff_deco[i].adjoint();
                        target += scheme.streams[stage.decode_jointly[i]].dof_load * log2p;
                    }

                SubsetMargin sm;
                sm.subset_mask = mask;
                sm.mi_bits = gaussian_mi(sig, noise);
                sm.target_bits = target;
                sm.dof_margin = (sm.mi_bits - target) / log2p;
                record.min_margin = std::min(record.min_margin, sm.dof_margin);
                record.subsets.push_back(sm);
            }
            record.feasible = record.min_margin >= -kStageCreditTolerance;
            out.push_back(std::move(record));
        }
    }
    return out;
}

namespace
{

// Certified rate per stream on one channel draw: full target when every
// subset constraint of the stage clears the tolerance, otherwise the
// stage's streams are credited proportionally to the binding subset.
struct TrialRates
{
    double user1 = 0.0;
    double user2 = 0.0;
    std::vector<double> margins; // flattened in stage-major, mask-minor order
};

TrialRates evaluate_trial(const SchemeSpec &scheme, const ChannelSet &channels,
                          const std::vector<Eigen::VectorXcd> &precoders)
{
    const double log2p = std::log2(channels.power);
    const std::vector<StageMargin> stages = stage_margins(scheme, channels, precoders);

    std::vector<double> credited(scheme.streams.size(), -1.0);
    TrialRates rates;

    std::size_t stage_cursor = 0;
    for (const DecodePlan &plan : scheme.plans)
        for (const DecodeStage &stage : plan.stages)
        {
            const StageMargin &record = stages[stage_cursor++];
            for (const SubsetMargin &sm : record.subsets)
                rates.margins.push_back(sm.dof_margin);

            double target_sum = 0.0;
            for (int s : stage.decode_jointly)
                target_sum += scheme.streams[s].dof_load * log2p;

            // Max achievable sum under the subset constraints (with each
            // stream capped at its target) is target_sum + min_margin *
            // log2(P); the tolerance acts as grace so the credit is
            // continuous in P and full once every constraint clears it.
            double ratio = 1.0;
            if (target_sum > 0.0 && !record.feasible)
            {
                const double credit_sum =
                    target_sum + (record.min_margin + kStageCreditTolerance) * log2p;
                ratio = std::max(0.0, credit_sum / target_sum);
            }
            for (int s : stage.decode_jointly)
            {
                const double credit = ratio * scheme.streams[s].dof_load * log2p;
                credited[s] = credited[s] < 0.0 ? credit : std::min(credited[s], credit);
            }
        }

    for (std::size_t s = 0; s < scheme.streams.size(); ++s)
    {
        const double target = scheme.streams[s].dof_load * log2p;
        const double rate = std::min(target, std::max(credited[s], 0.0));
        (scheme.streams[s].owner == 1 ? rates.user1 : rates.user2) += rate;
    }
    return rates;
}

} // namespace

SlopeReport estimate_dof_slopes(const AntennaConfig &config, const CsitProfile &csit,
                                std::span<const double> p_grid, int trials, std::uint64_t seed, int threads)
{
    if (p_grid.size() < 3)
        throw std::invalid_argument("p_grid needs at least 3 points");
    for (std::size_t i = 1; i < p_grid.size(); ++i)
        if (!(p_grid[i] > p_grid[i - 1]))
            throw std::invalid_argument("p_grid must be strictly increasing");
    if (!(p_grid.back() >= 1e8))
        throw std::invalid_argument("largest grid power must be at least 1e8");
    if (trials < 10)
        throw std::invalid_argument("trials must be >= 10");

    const SchemeSpec scheme = build_scheme(config, csit);

    SlopeReport report;
    report.config = scheme.config;
    report.csit = scheme.csit;
    report.predicted = scheme.predicted;
    report.p_grid.assign(p_grid.begin(), p_grid.end());
    report.trials = trials;
    report.seed = seed;

    const int num_p = (int)p_grid.size();
    std::vector<std::vector<TrialRates>> per_trial(trials, std::vector<TrialRates>(num_p));

    parallel_for(trials, resolve_threads(threads), [&](int t) {
        const std::uint64_t trial_base = derive_seed(seed, t);
        for (int gi = 0; gi < num_p; ++gi)
        {
            // One seed per trial: the est/err draws repeat across the grid,
            // so finite differences cancel the O(1) rate offsets.
            const ChannelSet channels =
                sample_channels(scheme.config, scheme.csit, p_grid[gi], derive_seed(trial_base, 1));
            const auto precoders = realize_precoders(scheme, channels, derive_seed(trial_base, 2));
            per_trial[t][gi] = evaluate_trial(scheme, channels, precoders);
        }
    });

    const std::size_t margin_slots = per_trial[0][0].margins.size();
    report.rate_user1.assign(num_p, 0.0);
    report.rate_user2.assign(num_p, 0.0);
    report.min_margin.assign(num_p, 0.0);

    for (int gi = 0; gi < num_p; ++gi)
    {
        double r1 = 0.0, r2 = 0.0;
        std::vector<double> margin_sum(margin_slots, 0.0);
        for (int t = 0; t < trials; ++t) // fixed order: reduction is thread-count invariant
        {
            r1 += per_trial[t][gi].user1;
            r2 += per_trial[t][gi].user2;
            for (std::size_t k = 0; k < margin_slots; ++k)
                margin_sum[k] += per_trial[t][gi].margins[k];
        }
        report.rate_user1[gi] = r1 / trials;
        report.rate_user2[gi] = r2 / trials;
        double min_margin = std::numeric_limits<double>::infinity();
        for (double m : margin_sum)
            min_margin = std::min(min_margin, m / trials);
        report.min_margin[gi] = margin_slots == 0 ? 0.0 : min_margin;
    }

    for (int gi = 1; gi < num_p; ++gi)
    {
        const double dlog = std::log2(p_grid[gi]) - std::log2(p_grid[gi - 1]);
        report.slope_user1.push_back((report.rate_user1[gi] - report.rate_user1[gi - 1]) / dlog);
        report.slope_user2.push_back((report.rate_user2[gi] - report.rate_user2[gi - 1]) / dlog);
    }
    report.headline_slope1 = report.slope_user1.back();
    report.headline_slope2 = report.slope_user2.back();
    report.min_margin_at_pmax = report.min_margin.back();
    report.scheme_infeasible = report.min_margin_at_pmax < kInfeasibleMargin;
    return report;
}

std::vector<FloorFit> interference_floor_probe(const SchemeSpec &scheme, std::span<const double> p_grid,
                                               int trials, std::uint64_t seed, int threads)
{
    if (p_grid.size() < 2)
        throw std::invalid_argument("p_grid needs at least 2 points");
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");

    // Group private streams by (owner, transmit exponent), first appearance
    // order; each group is probed at the receiver its precoders avoid.
    std::vector<std::pair<int, double>> group_keys;
    std::vector<std::vector<int>> group_streams;
    for (int s = 0; s < (int)scheme.streams.size(); ++s)
    {
        const StreamSpec &spec = scheme.streams[s];
        if (spec.precoder != PrecoderKind::NullOfCross)
            continue;
        const std::pair<int, double> key{spec.owner, spec.power_exp};
        auto it = std::find(group_keys.begin(), group_keys.end(), key);
        if (it == group_keys.end())
        {
            group_keys.push_back(key);
            group_streams.push_back({s});
        }
        else
        {
            group_streams[it - group_keys.begin()].push_back(s);
        }
    }
    if (group_keys.empty())
        return {};

    const int num_p = (int)p_grid.size();
    const int num_groups = (int)group_keys.size();
    // power_sum[t][gi][g]
    std::vector<std::vector<std::vector<double>>> power_per_trial(
        trials, std::vector<std::vector<double>>(num_p, std::vector<double>(num_groups, 0.0)));

    parallel_for(trials, resolve_threads(threads), [&](int t) {
        const std::uint64_t trial_base = derive_seed(seed, t);
        for (int gi = 0; gi < num_p; ++gi)
        {
            const ChannelSet channels =
                sample_channels(scheme.config, scheme.csit, p_grid[gi], derive_seed(trial_base, 1));
            const auto precoders = realize_precoders(scheme, channels, derive_seed(trial_base, 2));
            const auto amp2 = stream_amplitudes_sq(scheme, p_grid[gi]);

            for (int g = 0; g < num_groups; ++g)
            {
                const int rx = group_keys[g].first == 1 ? 2 : 1;
                double received = 0.0;
                for (int s : group_streams[g])
                    received +=
                        amp2[s] * (channels.actual(rx, scheme.streams[s].owner) * precoders[s]).squaredNorm();
                power_per_trial[t][gi][g] = received;
            }
        }
    });

    std::vector<FloorFit> out(num_groups);
    for (int g = 0; g < num_groups; ++g)
    {
        FloorFit &fit = out[g];
        fit.owner = group_keys[g].first;
        fit.receiver = fit.owner == 1 ? 2 : 1;
        fit.power_exp = group_keys[g].second;
        fit.mean_power.assign(num_p, 0.0);
        for (int gi = 0; gi < num_p; ++gi)
        {
            double sum = 0.0;
            for (int t = 0; t < trials; ++t)
                sum += power_per_trial[t][gi][g];
            fit.mean_power[gi] = sum / trials;
        }

        // Least-squares slope of log(received power) against log(P).
        double x_mean = 0.0, y_mean = 0.0;
        for (int gi = 0; gi < num_p; ++gi)
        {
            x_mean += std::log(p_grid[gi]);
            y_mean += std::log(fit.mean_power[gi]);
        }
        x_mean /= num_p;
        y_mean /= num_p;
        double sxx = 0.0, sxy = 0.0;
        for (int gi = 0; gi < num_p; ++gi)
        {
            const double dx = std::log(p_grid[gi]) - x_mean;
            sxy += dx * (std::log(fit.mean_power[gi]) - y_mean);
            sxx += dx * dx;
        }
        fit.exponent = sxy / sxx;
    }
    return out;
}

} // namespace doflab
