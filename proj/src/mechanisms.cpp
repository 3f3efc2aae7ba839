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
#include <numeric>

#include "persuade/errors.hpp"

namespace persuade {

std::size_t VotingMechanism::profile_count() const {
  std::size_t count = 1;
  for (const auto& votes : vote_sets) count *= votes.size();
  return count;
}

std::size_t VotingMechanism::profile_index(std::span<const int> votes) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < vote_sets.size(); ++i) {
    idx = idx * vote_sets[i].size() + static_cast<std::size_t>(votes[i]);
  }
  return idx;
}

double VotingMechanism::decide(std::span<const int> votes) const {
  return decision[profile_index(votes)];
}

namespace {

// Iterates profiles in flat-index order.
class ProfileIterator {
 public:
  explicit ProfileIterator(const VotingMechanism& mech)
      : mech_(mech), votes_(mech.vote_sets.size(), 0) {}

  std::span<const int> votes() const { return votes_; }
  bool done() const { return done_; }

  void advance() {
    for (int i = static_cast<int>(votes_.size()) - 1; i >= 0; --i) {
      if (++votes_[i] < static_cast<int>(mech_.vote_sets[i].size())) return;
      votes_[i] = 0;
    }
    done_ = true;
  }

 private:
  const VotingMechanism& mech_;
  std::vector<int> votes_;
  bool done_ = false;
};

}  // namespace

MechanismValidation validate_mechanism(const VotingMechanism& mech) {
  MechanismValidation report;
  if (mech.vote_sets.empty()) {
    report.violations.push_back("NoMembers");
    return report;
  }
  for (const auto& votes : mech.vote_sets) {
    if (votes.empty()) {
      report.violations.push_back("EmptyVoteSet");
      return report;
    }
  }
  if (mech.decision.size() != mech.profile_count()) {
    report.violations.push_back("IncompleteDecisionTable");
    return report;
  }
  for (double d : mech.decision) {
    if (!(d >= 0.0 && d <= 1.0)) {
      report.violations.push_back("DecisionOutOfRange");
      return report;
    }
  }
  for (ProfileIterator it(mech); !it.done(); it.advance()) {
    const double d = mech.decide(it.votes());
    if (d == 1.0 && !report.enact_profile) {
      report.enact_profile = std::vector<int>(it.votes().begin(), it.votes().end());
    }
    if (d == 0.0 && !report.block_profile) {
      report.block_profile = std::vector<int>(it.votes().begin(), it.votes().end());
    }
  }
  if (!report.enact_profile) report.violations.push_back("MissingUnanimousEnact");
  if (!report.block_profile) report.violations.push_back("MissingUnanimousBlock");
  report.ok = report.violations.empty();
  return report;
}

VotingMechanism make_catalog_mechanism(const MechanismKind& kind, int n) {
  if (n < 1) throw ParameterOutOfRange("mechanism needs at least one member");
  if (n > 20) {
    throw ParameterOutOfRange("catalog mechanisms are limited to 20 members");
  }
  VotingMechanism mech;
  mech.vote_sets.assign(n, {"no", "yes"});
  mech.decision.assign(std::size_t{1} << n, 0.0);

  auto fill = [&](auto&& rule) {
    for (ProfileIterator it(mech); !it.done(); it.advance()) {
      mech.decision[mech.profile_index(it.votes())] = rule(it.votes());
    }
  };

  if (const auto* d = std::get_if<Dictatorship>(&kind)) {
    if (d->member < 0 || d->member >= n) {
      throw ParameterOutOfRange("dictator index out of range");
    }
    fill([&](std::span<const int> v) { return v[d->member] == 1 ? 1.0 : 0.0; });
    mech.name = "dictatorship(m" + std::to_string(d->member + 1) + ")";
  } else if (const auto* km = std::get_if<KMajority>(&kind)) {
    if (km->k < 1 || km->k > n) {
      throw ParameterOutOfRange("k-majority threshold out of range");
    }
    fill([&](std::span<const int> v) {
      const int yes = static_cast<int>(std::count(v.begin(), v.end(), 1));
      return yes >= km->k ? 1.0 : 0.0;
    });
    mech.name = "k_majority(" + std::to_string(km->k) + ")";
  } else if (std::holds_alternative<Unanimity>(kind)) {
    fill([&](std::span<const int> v) {
      return std::count(v.begin(), v.end(), 1) == n ? 1.0 : 0.0;
    });
    mech.name = "unanimity";
  } else {
    const auto& wt = std::get<WeightedThreshold>(kind);
    if (static_cast<int>(wt.weights.size()) != n) {
      throw ParameterOutOfRange("weighted threshold needs one weight per member");
    }
    fill([&](std::span<const int> v) {
      double total = 0.0;
      for (int i = 0; i < n; ++i) total += wt.weights[i] * v[i];
      return total >= wt.theta ? 1.0 : 0.0;
    });
    mech.name = "weighted_threshold";
  }
  return mech;
}

std::optional<int> is_dictatorship(const VotingMechanism& mech) {
  const int n = mech.n_members();
  for (int i = 0; i < n; ++i) {
    // Invariance: for each of i's votes the table must be constant over the
    // peers' profiles, and the per-vote constants must not all coincide.
    bool invariant = true;
    std::vector<double> perVote(mech.vote_sets[i].size());
    std::vector<bool> seen(mech.vote_sets[i].size(), false);
    for (ProfileIterator it(mech); !it.done() && invariant; it.advance()) {
      const int vi = it.votes()[i];
      const double d = mech.decide(it.votes());
      if (!seen[vi]) {
        seen[vi] = true;
        perVote[vi] = d;
      } else if (perVote[vi] != d) {
        invariant = false;
      }
    }
    if (!invariant) continue;
    const bool varies =
        std::any_of(perVote.begin(), perVote.end(),
                    [&](double d) { return d != perVote.front(); });
    if (varies) return i;
  }
  return std::nullopt;
}

PivotalBounds pivotal_bounds(const VotingMechanism& mech, int member,
                             std::span<const int> others) {
  const int n = mech.n_members();
  if (member < 0 || member >= n) {
    throw ParameterOutOfRange("pivotal_bounds: member index out of range");
  }
  if (static_cast<int>(others.size()) != n - 1) {
    throw ParameterOutOfRange("pivotal_bounds: peer profile has wrong length");
  }
  std::vector<int> votes(n);
  for (int i = 0, j = 0; i < n; ++i) {
    if (i != member) votes[i] = others[j++];
  }
  PivotalBounds bounds{1.0, 0.0};
  for (int v = 0; v < static_cast<int>(mech.vote_sets[member].size()); ++v) {
    votes[member] = v;
    const double d = mech.decide(votes);
    bounds.d_min = std::min(bounds.d_min, d);
    bounds.d_max = std::max(bounds.d_max, d);
  }
  return bounds;
}

std::vector<VotingMechanism> full_catalog(int n) {
  std::vector<VotingMechanism> catalog;
  for (int i = 0; i < n; ++i) {
    catalog.push_back(make_catalog_mechanism(Dictatorship{i}, n));
  }
  for (int k = 1; k <= n; ++k) {
    catalog.push_back(make_catalog_mechanism(KMajority{k}, n));
  }
  catalog.push_back(make_catalog_mechanism(Unanimity{}, n));
  return catalog;
}

}  // namespace persuade
