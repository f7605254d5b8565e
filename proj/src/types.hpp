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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace doflab
{

// Antenna counts of the four nodes: transmitters 1,2 and receivers 1,2.
struct AntennaConfig
{
    int m1 = 1; // transmitter 1
    int m2 = 1; // transmitter 2
    int n1 = 1; // receiver 1
    int n2 = 1; // receiver 2

    bool operator==(const AntennaConfig &) const = default;

    // Exchanges the roles of the two users (tx and rx indices together).
    AntennaConfig swapped() const { return {m2, m1, n2, n1}; }
};

// Channel-estimate quality exponents beta in [0,1] per link; the estimation
// error variance of link (rx j <- tx i) scales as P^(-beta_ji). The direct-link
// exponents beta11/beta22 are carried along but never enter any DoF value.
struct CsitProfile
{
    double beta12 = 0.0; // rx 1 <- tx 2 (cross)
    double beta21 = 0.0; // rx 2 <- tx 1 (cross)
    double beta11 = 0.0; // rx 1 <- tx 1 (direct, unused by the formulas)
    double beta22 = 0.0; // rx 2 <- tx 2 (direct, unused by the formulas)

    bool operator==(const CsitProfile &) const = default;

    CsitProfile swapped() const { return {beta21, beta12, beta22, beta11}; }

    double cross(int rx, int tx) const { return rx == 1 ? beta12 : beta21; (void)tx; }
};

// A DoF operating point (d1, d2).
struct DofPoint
{
    double d1 = 0.0;
    double d2 = 0.0;
};

// Antenna-configuration regimes of the achievability constructions.
// Valid only under n1 <= n2; the five conditions partition that space.
enum class CaseLabel
{
    Case1Trivial, // m2 <= n1
    Case1,        // n1 < m2 <= n2
    Case2,        // m1 < n1 <= n2 < m2
    Case3,        // n1 <= m1 <= n2 < m2
    Case4,        // n1 <= n2 < min(m1, m2)
};

const char *to_string(CaseLabel label);

enum class MsgClass
{
    Common, // decodable by both receivers
    Private // decodable only by the owner's receiver
};

enum class PrecoderKind
{
    Generic,    // isotropically random unit vector
    NullOfCross // unit vector in the null space of the estimated cross channel
};

// One transmit stream of a compiled scheme. Transmit power scales as
// P^power_exp and the stream's codeword carries dof_load DoF.
struct StreamSpec
{
    int owner = 1; // transmitter index, 1 or 2
    MsgClass msg_class = MsgClass::Common;
    PrecoderKind precoder = PrecoderKind::Generic;
    double power_exp = 1.0;
    double dof_load = 0.0;

    // Receiver avoided by a null-space stream (the cross receiver).
    int avoided_receiver() const { return owner == 1 ? 2 : 1; }
};

// One decoding stage at a receiver. Stream indices refer to positions in
// SchemeSpec::streams. Streams decoded in earlier stages are subtracted
// before later stages; zero_force streams are projected out for this stage
// only; treat_as_noise lists every remaining undecoded stream (including
// those arriving at the noise floor, whose residuals still count as noise).
struct DecodeStage
{
    std::vector<int> zero_force;
    std::vector<int> decode_jointly;
    std::vector<int> treat_as_noise;
};

struct DecodePlan
{
    int receiver = 1;
    std::vector<DecodeStage> stages;
};

// Clamped power-level exponents used by the case constructions. bar12 is
// empty when the construction has no stream group governed by it.
struct BetaBar
{
    std::optional<double> bar12;
    double bar21 = 0.0;
};

// A compiled transmission plan: streams, per-receiver decode plans, and the
// DoF point the plan is built to achieve.
struct SchemeSpec
{
    AntennaConfig config;
    CsitProfile csit;
    CaseLabel case_label = CaseLabel::Case1Trivial;
    BetaBar beta_bar;
    std::vector<StreamSpec> streams;
    std::array<DecodePlan, 2> plans; // plans[0] -> receiver 1, plans[1] -> receiver 2
    DofPoint predicted;

    std::vector<int> streams_of(int owner) const;
};

// Raised when user-supplied parameters violate a precondition; the message
// names the offending field.
class ValidationError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Raised by operations that require n1 <= n2; the caller is expected to
// exchange the user indices and retry.
class RelabelRequired : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Checks antenna counts and clamps each beta into [0,1] (values above 1 are
// DoF-equivalent to perfect CSIT). Idempotent.
std::pair<AntennaConfig, CsitProfile> validate(const AntennaConfig &config, const CsitProfile &csit);

} // namespace doflab
