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

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace doflab
{

// splitmix64 finalizer; decorrelates nearby seed values.
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Deterministic sub-seed for an independent stream (trial index, module tag).
// Trials derive their seeds as a pure function of (master seed, index), so
// aggregation order and thread count cannot change any drawn value.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream)
{
    return mix64(master ^ mix64(stream + 1));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(mix64(seed)); }

// One circularly-symmetric complex Gaussian sample with unit variance
// (real and imaginary parts are independent N(0, 1/2)).
inline std::complex<double> complex_gaussian(std::mt19937_64 &rng)
{
    static constexpr double kHalfSigma = 0.70710678118654752440; // 1/sqrt(2)
    std::normal_distribution<double> dist(0.0, kHalfSigma);
    const double re = dist(rng);
    const double im = dist(rng);
    return {re, im};
}

inline Eigen::MatrixXcd gaussian_matrix(std::mt19937_64 &rng, Eigen::Index rows, Eigen::Index cols)
{
    Eigen::MatrixXcd out(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            out(r, c) = complex_gaussian(rng);
    return out;
}

// Isotropically distributed unit vector; redraws in the measure-zero event of
// a tiny norm.
inline Eigen::VectorXcd random_unit_vector(std::mt19937_64 &rng, Eigen::Index dim)
{
    for (;;)
    {
        Eigen::VectorXcd v = gaussian_matrix(rng, dim, 1);
        const double norm = v.norm();
        if (norm >= 1e-6)
            return v / norm;
    }
}

} // namespace doflab
