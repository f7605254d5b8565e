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

#include "mac_region.hpp"
#include "rate_engine.hpp"
#include "types.hpp"

#include <json.hpp>

namespace doflab
{

// Stable JSON shapes for CLI output and test fixtures.

nlohmann::json scheme_to_json(const SchemeSpec &scheme);
SchemeSpec scheme_from_json(const nlohmann::json &doc);

nlohmann::json slope_report_to_json(const SlopeReport &report);
nlohmann::json floor_fits_to_json(const std::vector<FloorFit> &fits);
nlohmann::json mac_check_to_json(const MacCheck &check);
nlohmann::json subset_slopes_to_json(const std::vector<SubsetSlope> &slopes);

} // namespace doflab
