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

#include "persuade/mechanisms.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "persuade/errors.hpp"

namespace persuade {
namespace {

TEST_CASE("validation finds witnesses") {
  // Two-member majority with a coin flip on a split vote.
  VotingMechanism mech;
  mech.vote_sets = {{"no", "yes"}, {"no", "yes"}};
  mech.decision = {0.0, 0.5, 0.5, 1.0};
  mech.name = "split_coin";
  const MechanismValidation v = validate_mechanism(mech);
  CHECK(v.ok);
  CHECK(*v.enact_profile == std::vector<int>{1, 1});
  CHECK(*v.block_profile == std::vector<int>{0, 0});

  VotingMechanism constant;
  constant.vote_sets = {{"no", "yes"}};
  constant.decision = {0.5, 0.5};
  const MechanismValidation vc = validate_mechanism(constant);
  CHECK_FALSE(vc.ok);
  CHECK(std::find(vc.violations.begin(), vc.violations.end(),
                  "MissingUnanimousEnact") != vc.violations.end());
  CHECK(std::find(vc.violations.begin(), vc.violations.end(),
                  "MissingUnanimousBlock") != vc.violations.end());

  CHECK(validate_mechanism(make_catalog_mechanism(Dictatorship{0}, 2)).ok);
}

TEST_CASE("catalog construction") {
  const VotingMechanism majority = make_catalog_mechanism(KMajority{2}, 3);
  CHECK(majority.decision.size() == 8);
  const std::vector<int> two{1, 1, 0};
  const std::vector<int> oneVote{0, 1, 0};
  CHECK(majority.decide(two) == 1.0);
  CHECK(majority.decide(oneVote) == 0.0);

  const VotingMechanism unanimity = make_catalog_mechanism(Unanimity{}, 2);
  const std::vector<int> yy{1, 1};
  const std::vector<int> yn{1, 0};
  CHECK(unanimity.decide(yy) == 1.0);
  CHECK(unanimity.decide(yn) == 0.0);

  const VotingMechanism dict = make_catalog_mechanism(Dictatorship{0}, 2);
  const std::vector<int> dy{1, 0};
  const std::vector<int> dn{0, 1};
  CHECK(dict.decide(dy) == 1.0);
  CHECK(dict.decide(dn) == 0.0);

  CHECK_THROWS_AS(make_catalog_mechanism(Dictatorship{3}, 2), ParameterOutOfRange);
  CHECK_THROWS_AS(make_catalog_mechanism(KMajority{0}, 2), ParameterOutOfRange);
  CHECK_THROWS_AS(make_catalog_mechanism(KMajority{4}, 3), ParameterOutOfRange);

  const VotingMechanism weighted = make_catalog_mechanism(
      WeightedThreshold{{0.7, 0.3}, 0.5}, 2);
  const std::vector<int> heavy{1, 0};
  const std::vector<int> light{0, 1};
  CHECK(weighted.decide(heavy) == 1.0);
  CHECK(weighted.decide(light) == 0.0);
}

TEST_CASE("dictatorship detection") {
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < n; ++i) {
      const VotingMechanism dict = make_catalog_mechanism(Dictatorship{i}, n);
      CHECK(is_dictatorship(dict) == i);
    }
  }
  CHECK_FALSE(is_dictatorship(make_catalog_mechanism(Unanimity{}, 2)).has_value());
  CHECK(is_dictatorship(make_catalog_mechanism(Unanimity{}, 1)) == 0);

  VotingMechanism constant;
  constant.vote_sets = {{"no", "yes"}, {"no", "yes"}};
  constant.decision = {0.5, 0.5, 0.5, 0.5};
  CHECK_FALSE(is_dictatorship(constant).has_value());
}

TEST_CASE("pivotal bounds") {
  const VotingMechanism unanimity = make_catalog_mechanism(Unanimity{}, 2);
  const std::vector<int> peerYes{1};
  const PivotalBounds pivotal = pivotal_bounds(unanimity, 0, peerYes);
  CHECK(pivotal.d_min == 0.0);
  CHECK(pivotal.d_max == 1.0);

  const VotingMechanism any = make_catalog_mechanism(KMajority{1}, 2);
  const PivotalBounds passed = pivotal_bounds(any, 0, peerYes);
  CHECK(passed.d_min == 1.0);
  CHECK(passed.d_max == 1.0);

  const VotingMechanism dict = make_catalog_mechanism(Dictatorship{0}, 2);
  const std::vector<int> dictatorNo{0};
  const PivotalBounds powerless = pivotal_bounds(dict, 1, dictatorNo);
  CHECK(powerless.d_min == 0.0);
  CHECK(powerless.d_max == 0.0);

  CHECK_THROWS_AS(pivotal_bounds(dict, 2, dictatorNo), ParameterOutOfRange);
}

TEST_CASE("catalog properties") {
  for (int n = 1; n <= 3; ++n) {
    for (const VotingMechanism& mech : full_catalog(n)) {
      CHECK(validate_mechanism(mech).ok);
      // Exhaustive pivotal-bound sanity over all peer profiles.
      std::vector<int> others(n - 1, 0);
      bool done = false;
      while (!done) {
        for (int i = 0; i < n; ++i) {
          const PivotalBounds b = pivotal_bounds(mech, i, others);
          CHECK(b.d_min <= b.d_max);
          CHECK(b.d_min >= 0.0);
          CHECK(b.d_max <= 1.0);
        }
        done = true;
        for (int j = n - 2; j >= 0; --j) {
          if (++others[j] < 2) {
            done = false;
            break;
          }
          others[j] = 0;
        }
        if (n == 1) done = true;
      }
    }
  }
}

}  // namespace
}  // namespace persuade
