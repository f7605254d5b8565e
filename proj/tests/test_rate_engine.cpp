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

#include "json_io.hpp"
#include "rng.hpp"
#include "scheme_builder.hpp"

#include <doctest.h>

#include <cmath>

using namespace doflab;

namespace
{

Eigen::MatrixXcd random_psd(std::mt19937_64 &rng, int n, double scale = 1.0)
{
    const Eigen::MatrixXcd a = gaussian_matrix(rng, n, n);
    return scale * a * a.adjoint();
}

// Independent MI route: generalized eigenvalues of the (signal, noise) pencil.
double mi_eigen_oracle(const Eigen::MatrixXcd &signal, const Eigen::MatrixXcd &noise)
{
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(signal, noise);
    double bits = 0.0;
    for (Eigen::Index i = 0; i < signal.rows(); ++i)
        bits += std::log2(1.0 + std::max(0.0, solver.eigenvalues()(i)));
    return bits;
}

} // namespace

TEST_CASE("gaussian MI closed-form spot values")
{
    Eigen::MatrixXcd one(1, 1), noise(1, 1);
    one << 1.0;
    noise << 1.0;
    CHECK(gaussian_mi(one, noise) == doctest::Approx(1.0).epsilon(1e-12));

    const Eigen::MatrixXcd signal = 100.0 * Eigen::MatrixXcd::Identity(2, 2);
    CHECK(gaussian_mi(signal, Eigen::MatrixXcd::Identity(2, 2)) ==
          doctest::Approx(2.0 * std::log2(101.0)).epsilon(1e-12));

    CHECK(gaussian_mi(Eigen::MatrixXcd::Zero(3, 3), Eigen::MatrixXcd::Identity(3, 3)) == 0.0);
}

TEST_CASE("gaussian MI agrees with the eigenvalue oracle")
{
    auto rng = make_rng(12);
    for (int i = 0; i < 50; ++i)
    {
        const Eigen::MatrixXcd s = random_psd(rng, 3);
        const Eigen::MatrixXcd n = random_psd(rng, 3) + 0.1 * Eigen::MatrixXcd::Identity(3, 3);
        const double mi = gaussian_mi(s, n);
        CHECK(mi == doctest::Approx(mi_eigen_oracle(s, n)).epsilon(1e-9));
    }
}

TEST_CASE("gaussian MI rejects an indefinite noise covariance")
{
    Eigen::MatrixXcd noise(2, 2);
    noise << 1.0, 0.0, 0.0, -1.0;
    CHECK_THROWS_AS(gaussian_mi(Eigen::MatrixXcd::Identity(2, 2), noise), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_mi(-Eigen::MatrixXcd::Identity(2, 2), Eigen::MatrixXcd::Identity(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("gaussian MI survives signals sixteen orders above the noise")
{
    auto rng = make_rng(55);
    const Eigen::MatrixXcd h = gaussian_matrix(rng, 3, 3);
    const Eigen::MatrixXcd sig = 1e18 * h * h.adjoint();
    const double mi = gaussian_mi(sig, Eigen::MatrixXcd::Identity(3, 3));
    CHECK(mi == doctest::Approx(mi_eigen_oracle(sig, Eigen::MatrixXcd::Identity(3, 3))).epsilon(1e-9));
}

TEST_CASE("projection never increases mutual information")
{
    auto rng = make_rng(21);
    for (int i = 0; i < 20; ++i)
    {
        const Eigen::MatrixXcd s = random_psd(rng, 4, 50.0);
        const Eigen::MatrixXcd n = random_psd(rng, 4) + Eigen::MatrixXcd::Identity(4, 4);
        // project onto the orthogonal complement of one random direction
        const Eigen::VectorXcd dir = random_unit_vector(rng, 4);
        Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(4, 4) - dir * dir.adjoint();
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(q, Eigen::ComputeThinU);
        const Eigen::MatrixXcd basis = svd.matrixU().leftCols(3);
        const double projected = gaussian_mi(basis.adjoint() * s * basis, basis.adjoint() * n * basis);
        CHECK(projected <= gaussian_mi(s, n) + 1e-9);
    }
}

TEST_CASE("chain rule: conditional stage MIs add up to the joint MI")
{
    auto rng = make_rng(33);
    const int streams = 4, dim = 3;
    std::vector<Eigen::VectorXcd> dirs;
    std::vector<double> powers{40.0, 10.0, 3.0, 1.5};
    for (int s = 0; s < streams; ++s)
        dirs.push_back(gaussian_matrix(rng, dim, 1));
    const Eigen::MatrixXcd base_noise = Eigen::MatrixXcd::Identity(dim, dim);

    const auto cov = [&](int s) { return Eigen::MatrixXcd(powers[s] * dirs[s] * dirs[s].adjoint()); };

    Eigen::MatrixXcd joint = Eigen::MatrixXcd::Zero(dim, dim);
    for (int s = 0; s < streams; ++s)
        joint += cov(s);
    const double joint_mi = gaussian_mi(joint, base_noise);

    // successive decoding in two different orders
    for (const auto &order : {std::vector<int>{0, 1, 2, 3}, std::vector<int>{3, 1, 0, 2}})
    {
        double total = 0.0;
        for (std::size_t i = 0; i < order.size(); ++i)
        {
            Eigen::MatrixXcd noise = base_noise;
            for (std::size_t j = i + 1; j < order.size(); ++j)
                noise += cov(order[j]);
            total += gaussian_mi(cov(order[i]), noise);
        }
        CHECK(total == doctest::Approx(joint_mi).epsilon(1e-6));
    }
}

TEST_CASE("slope regression calibration on interference-free MIMO")
{
    // single-user m x n link: slope must equal min(m, n)
    const std::vector<double> grid{1e6, 1e8, 1e10};
    auto rng = make_rng(8);
    for (const auto &[m, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}})
    {
        const int k = std::min(m, n);
        std::vector<double> rate(grid.size(), 0.0);
        const int trials = 30;
        for (int t = 0; t < trials; ++t)
        {
            const Eigen::MatrixXcd h = gaussian_matrix(rng, n, m);
            for (std::size_t gi = 0; gi < grid.size(); ++gi)
            {
                const Eigen::MatrixXcd sig = (grid[gi] / m) * h * h.adjoint();
                rate[gi] += gaussian_mi(sig, Eigen::MatrixXcd::Identity(n, n)) / trials;
            }
        }
        const double slope = (rate[2] - rate[1]) / (std::log2(grid[2]) - std::log2(grid[1]));
        CHECK(slope == doctest::Approx(k).epsilon(0.05 / k));
    }
}

TEST_CASE("stage margins: elevated multiplexing example at P=1e8")
{
    const SchemeSpec scheme = build_scheme({3, 4, 1, 3}, {2.0 / 3.0, 0, 0, 0});
    const int trials = 50;
    double rx2_full_margin = 0.0;
    for (int t = 0; t < trials; ++t)
    {
        const ChannelSet channels = sample_channels(scheme.config, scheme.csit, 1e8, derive_seed(414, t));
        const auto precoders = realize_precoders(scheme, channels, derive_seed(515, t));
        const auto stages = stage_margins(scheme, channels, precoders);

        // receiver 2, first stage, full subset of its three-stream MAC
        for (const StageMargin &record : stages)
            if (record.receiver == 2 && record.stage == 0)
            {
                REQUIRE(record.subsets.size() == 7);
                rx2_full_margin += record.subsets.back().dof_margin / trials;
            }
    }
    CHECK(rx2_full_margin >= -0.05);
}

TEST_CASE("stage margins: single clean stream earns one DoF per dimension")
{
    // Case1Trivial with one unit-DoF stream and an idle transmitter 2.
    const SchemeSpec scheme = build_scheme({1, 1, 1, 2}, {0, 0, 0, 0});
    REQUIRE(scheme.streams.size() == 1);
    double margin = 0.0;
    const int trials = 40;
    for (int t = 0; t < trials; ++t)
    {
        const ChannelSet channels = sample_channels(scheme.config, scheme.csit, 1e6, derive_seed(3, t));
        const auto precoders = realize_precoders(scheme, channels, derive_seed(4, t));
        margin += stage_margins(scheme, channels, precoders)[0].subsets[0].dof_margin / trials;
    }
    CHECK(margin == doctest::Approx(1.0 - scheme.streams[0].dof_load).epsilon(0.1)); // ~= 0
}

TEST_CASE("stage margins: zero-DoF streams are vacuously feasible")
{
    const SchemeSpec scheme = build_scheme({1, 4, 1, 3}, {0, 0, 0, 0});
    const ChannelSet channels = sample_channels(scheme.config, scheme.csit, 1e6, 2);
    const auto precoders = realize_precoders(scheme, channels, 3);
    for (const StageMargin &record : stage_margins(scheme, channels, precoders))
        for (const SubsetMargin &sm : record.subsets)
            if (sm.target_bits == 0.0)
                CHECK(sm.dof_margin >= 0.0);
}

TEST_CASE("slope estimates reproduce the worked examples")
{
    const std::vector<double> grid{1e6, 1e8, 1e10};

    SUBCASE("(1,4,1,3) at beta12=1/2 gives (1,1)")
    {
        const SlopeReport r = estimate_dof_slopes({1, 4, 1, 3}, {0.5, 0, 0, 0}, grid, 30, 101);
        CHECK(std::abs(r.headline_slope1 - 1.0) <= 0.1);
        CHECK(std::abs(r.headline_slope2 - 1.0) <= 0.1);
        CHECK_FALSE(r.scheme_infeasible);
        for (double s : r.slope_user1)
            CHECK(s >= -0.02);
        for (double s : r.slope_user2)
            CHECK(s >= -0.02);
    }
    SUBCASE("(3,4,1,3) at beta12=1 gives the perfect-CSIT pair (1,2)")
    {
        const SlopeReport r = estimate_dof_slopes({3, 4, 1, 3}, {1.0, 0, 0, 0}, grid, 30, 102);
        CHECK(std::abs(r.headline_slope1 - 1.0) <= 0.1);
        CHECK(std::abs(r.headline_slope2 - 2.0) <= 0.1);
    }
    SUBCASE("(1,4,1,3) with no CSIT pins user 2 at zero")
    {
        const SlopeReport r = estimate_dof_slopes({1, 4, 1, 3}, {0, 0, 0, 0}, grid, 30, 103);
        CHECK(std::abs(r.headline_slope2) <= 0.05);
    }
}

TEST_CASE("slope estimation preconditions")
{
    const std::vector<double> ok{1e6, 1e8, 1e10};
    CHECK_THROWS_AS(estimate_dof_slopes({1, 4, 1, 3}, {}, std::vector<double>{1e6, 1e8}, 20, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_dof_slopes({1, 4, 1, 3}, {}, std::vector<double>{1e8, 1e6, 1e10}, 20, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_dof_slopes({1, 4, 1, 3}, {}, std::vector<double>{1e2, 1e4, 1e6}, 20, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_dof_slopes({1, 4, 1, 3}, {}, ok, 5, 1), std::invalid_argument);
}

TEST_CASE("reports are identical for any thread count and repeatable by seed")
{
    const std::vector<double> grid{1e6, 1e8, 1e10};
    const SlopeReport serial = estimate_dof_slopes({2, 4, 1, 3}, {0.75, 0, 0, 0}, grid, 20, 77, 1);
    const SlopeReport parallel = estimate_dof_slopes({2, 4, 1, 3}, {0.75, 0, 0, 0}, grid, 20, 77, 4);
    const SlopeReport again = estimate_dof_slopes({2, 4, 1, 3}, {0.75, 0, 0, 0}, grid, 20, 77, 2);
    CHECK(slope_report_to_json(serial).dump() == slope_report_to_json(parallel).dump());
    CHECK(slope_report_to_json(serial).dump() == slope_report_to_json(again).dump());
}

TEST_CASE("interference floors stay flat and a rigged exponent is caught")
{
    const std::vector<double> grid{1e4, 1e6, 1e8, 1e10};

    SUBCASE("(1,4,1,3) at beta12=0.7")
    {
        const SchemeSpec scheme = build_scheme({1, 4, 1, 3}, {0.7, 0, 0, 0});
        const auto fits = interference_floor_probe(scheme, grid, 30, 5);
        REQUIRE(!fits.empty());
        for (const FloorFit &fit : fits)
        {
            CHECK(fit.receiver == 1);
            CHECK(fit.exponent <= 0.05);
        }
    }
    SUBCASE("beta12=0 keeps unit-power interference flat")
    {
        const SchemeSpec scheme = build_scheme({1, 4, 1, 3}, {0, 0, 0, 0});
        const auto fits = interference_floor_probe(scheme, grid, 30, 6);
        for (const FloorFit &fit : fits)
            CHECK(fit.exponent <= 0.05);
    }
    SUBCASE("mis-setting the transmit exponent to beta12+0.3 shows up in the fit")
    {
        SchemeSpec rigged = build_scheme({1, 4, 1, 3}, {0.7, 0, 0, 0});
        for (StreamSpec &s : rigged.streams)
            if (s.precoder == PrecoderKind::NullOfCross)
                s.power_exp = 0.7 + 0.3;
        const auto fits = interference_floor_probe(rigged, grid, 30, 7);
        REQUIRE(!fits.empty());
        for (const FloorFit &fit : fits)
            CHECK(fit.exponent >= 0.2);
    }
    SUBCASE("a scheme without private streams probes empty")
    {
        const SchemeSpec scheme = build_scheme({2, 1, 1, 1}, {0.5, 0.5, 0, 0});
        CHECK(interference_floor_probe(scheme, grid, 10, 8).empty());
    }
}
