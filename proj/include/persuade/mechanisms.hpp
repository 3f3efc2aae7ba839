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

#ifndef PERSUADE_MECHANISMS_HPP_
#define PERSUADE_MECHANISMS_HPP_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace persuade {

// A simultaneous voting mechanism over finite labelled vote sets: a total
// decision table mapping every vote profile to an enactment probability.
// Profiles are flat-indexed with the last member's vote varying fastest.
struct VotingMechanism {
  std::vector<std::vector<std::string>> vote_sets;  // one label list per member
  std::vector<double> decision;                     // size = product of set sizes
  std::string name;

  int n_members() const { return static_cast<int>(vote_sets.size()); }
  std::size_t profile_count() const;
  std::size_t profile_index(std::span<const int> votes) const;
  double decide(std::span<const int> votes) const;
};

// Structural validity: table total and within [0, 1], and witnesses of a
// profile that surely enacts and one that surely blocks. Violations are data,
// reported by name, not exceptions.
struct MechanismValidation {
  bool ok = false;
  std::optional<std::vector<int>> enact_profile;
  std::optional<std::vector<int>> block_profile;
  std::vector<std::string> violations;
};

MechanismValidation validate_mechanism(const VotingMechanism& mech);

struct Dictatorship {
  int member;
};
struct KMajority {
  int k;
};
struct Unanimity {};
struct WeightedThreshold {
  std::vector<double> weights;
  double theta;
};
using MechanismKind =
    std::variant<Dictatorship, KMajority, Unanimity, WeightedThreshold>;

// Standard catalog entries over binary {no, yes} votes. Throws
// ParameterOutOfRange for parameters outside 0 <= i < n, 1 <= k <= n, or a
// weight list of the wrong length.
VotingMechanism make_catalog_mechanism(const MechanismKind& kind, int n);

// The unique member whose vote alone determines the decision (and in whose
// vote the decision actually varies), when one exists.
std::optional<int> is_dictatorship(const VotingMechanism& mech);

// Range of enactment probabilities member `member` can induce given the
// others' fixed votes.
struct PivotalBounds {
  double d_min = 0.0;
  double d_max = 0.0;
};

PivotalBounds pivotal_bounds(const VotingMechanism& mech, int member,
                             std::span<const int> others);

// Every dictatorship, k-majorities for k = 1..n, and unanimity.
std::vector<VotingMechanism> full_catalog(int n);

}  // namespace persuade

#endif  // PERSUADE_MECHANISMS_HPP_
