// Copyright 2026 The persuade-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERSUADE_SCENARIO_HPP_
#define PERSUADE_SCENARIO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "persuade/belief.hpp"
#include "persuade/equilibrium_lab.hpp"
#include "persuade/mechanisms.hpp"
#include "persuade/preferences.hpp"

namespace persuade {

// A mechanism as written in the scenario file: either a catalog kind with
// parameters or an explicit decision table. Kept verbatim so scenarios
// serialize back unchanged.
struct MechanismDescriptor {
  std::optional<MechanismKind> kind;
  std::optional<VotingMechanism> table;
};

// Everything a CLI run needs: the committee, the mechanisms to audit, an
// optional experiment menu, and numeric knobs. All referenced-module
// invariants are enforced at load time.
struct Scenario {
  double prior = 0.5;
  std::vector<MemberSpec> members;
  std::vector<MechanismDescriptor> mechanisms;
  std::vector<BeliefDistribution> menu;
  int grid_n = kDefaultGridN;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::string id = "scenario";  // derived from the file name, not serialized

  Committee committee() const;
  ExperimentMenu experiment_menu() const;  // throws EmptyMenu when absent
  std::vector<VotingMechanism> mechanism_list() const;
};

// Reads and validates a scenario file. Throws ParseError for malformed JSON
// or wrong field types and ValidationError for violated model invariants.
Scenario parse_scenario(const std::string& path);
Scenario scenario_from_json(const nlohmann::json& j, const std::string& id);

nlohmann::json scenario_to_json(const Scenario& s);
nlohmann::json kernel_to_json(const CostKernel& kernel);
CostKernel kernel_from_json(const nlohmann::json& j);

}  // namespace persuade

#endif  // PERSUADE_SCENARIO_HPP_
