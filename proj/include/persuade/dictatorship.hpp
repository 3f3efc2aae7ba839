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

#ifndef PERSUADE_DICTATORSHIP_HPP_
#define PERSUADE_DICTATORSHIP_HPP_

#include <vector>

#include "persuade/belief.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/preferences.hpp"

namespace persuade {

// Conditional enactment/blocking probabilities and per-member expected
// information costs for one mechanism-equilibrium pair; the three coordinates
// of the dominance comparison.
struct OutcomeStats {
  double p_enact_good = 0.0;  // P(enact | good state)
  double p_enact_bad = 0.0;   // P(enact | bad state)
  double p_enact = 0.0;       // unconditional
  std::vector<double> expected_cost;
};

// Builds the stats for a final belief distribution and a per-atom enactment
// probability, decomposing by state; costs are supplied by the caller.
OutcomeStats outcome_from_decisions(const BeliefDistribution& final_beliefs,
                                    const std::vector<double>& enact_probs,
                                    double prior,
                                    std::vector<double> expected_cost);

// Dictator's vote: enact iff q is at least her indifference threshold (a tie
// is resolved toward the lobbyist-preferred vote).
double dictator_enact_prob(const MemberSpec& m, Belief q);

// Dictator's information strategy at interim belief r: the unique
// Bayes-plausible distribution on the two thresholds when r lies strictly
// between them, the point mass at r otherwise.
BeliefDistribution dictator_info_strategy(const MemberSpec& m,
                                          const PersuasionThresholds& th,
                                          Belief r);

// Equilibrium enactment probability of the dictatorship as a function of the
// interim belief: 0 up to q_low, linear on [q_low, q_high], 1 beyond.
// Degenerate thresholds give the step at the indifference point.
double zeta_value(const PersuasionThresholds& th, double t_indiff, double r);

// Concave envelope of zeta: min{1, r / q_high}.
double zeta_envelope_value(const PersuasionThresholds& th, double r);

GridFunction enactment_function(const MemberSpec& m, int grid_n);

struct DictatorshipEquilibrium {
  int member_index = 0;
  PersuasionThresholds thresholds;
  BeliefDistribution lobbyist_signal;
  GridFunction enactment_fn;
  OutcomeStats outcome;
  double lobbyist_payoff = 0.0;  // equals outcome.p_enact
};

// Closed-form equilibrium of the member's dictatorship: the lobbyist splits
// the prior between conclusive bad news and the dictator's upper threshold
// (or discloses nothing when the prior is already beyond it); nobody pays
// an information cost and a good policy is never blocked.
DictatorshipEquilibrium dictatorship_equilibrium(const Committee& c, int member,
                                                 int grid_n);

struct MostDemanding {
  int index = 0;
  double q_hat = 0.0;
  std::vector<PersuasionThresholds> thresholds;  // one per member
};

// Member with the largest upper threshold of persuasion; ties break toward
// the lowest index.
MostDemanding most_demanding(const Committee& c, int grid_n);

}  // namespace persuade

#endif  // PERSUADE_DICTATORSHIP_HPP_
