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

#include "persuade/dictatorship.hpp"

#include <cmath>

#include "persuade/errors.hpp"

namespace persuade {

OutcomeStats outcome_from_decisions(const BeliefDistribution& final_beliefs,
                                    const std::vector<double>& enact_probs,
                                    double prior,
                                    std::vector<double> expected_cost) {
  const StateConditionals cond =
      state_conditional_decomposition(final_beliefs, prior);
  OutcomeStats stats;
  stats.expected_cost = std::move(expected_cost);
  for (std::size_t k = 0; k < final_beliefs.size(); ++k) {
    const double atom = final_beliefs.support[k];
    const double e = enact_probs[k];
    stats.p_enact_good += cond.given_good.weight_at(atom) * e;
    stats.p_enact_bad += cond.given_bad.weight_at(atom) * e;
    stats.p_enact += final_beliefs.weights[k] * e;
  }
  return stats;
}

double dictator_enact_prob(const MemberSpec& m, Belief q) {
  return q >= indifference_threshold(m) - kIndifferenceTie ? 1.0 : 0.0;
}

BeliefDistribution dictator_info_strategy(const MemberSpec& m,
                                          const PersuasionThresholds& th,
                                          Belief r) {
  (void)m;
  if (th.degenerate() || r <= th.q_low || r >= th.q_high) {
    return degenerate(r);
  }
  const double wHigh = (r - th.q_low) / (th.q_high - th.q_low);
  return make_distribution({th.q_low, th.q_high}, {1.0 - wHigh, wHigh});
}

double zeta_value(const PersuasionThresholds& th, double t_indiff, double r) {
  if (th.degenerate()) return r >= t_indiff - kIndifferenceTie ? 1.0 : 0.0;
  if (r <= th.q_low) return 0.0;
  if (r >= th.q_high) return 1.0;
  return (r - th.q_low) / (th.q_high - th.q_low);
}

double zeta_envelope_value(const PersuasionThresholds& th, double r) {
  if (r >= th.q_high) return 1.0;
  return r / th.q_high;
}

GridFunction enactment_function(const MemberSpec& m, int grid_n) {
  const PersuasionThresholds th = persuasion_thresholds(m, grid_n);
  const double t = indifference_threshold(m);
  GridFunction g;
  g.n = grid_n;
  g.values.resize(grid_n);
  const double inv = 1.0 / (grid_n - 1);
  for (int k = 0; k < grid_n; ++k) g.values[k] = zeta_value(th, t, k * inv);
  return g;
}

DictatorshipEquilibrium dictatorship_equilibrium(const Committee& c, int member,
                                                 int grid_n) {
  if (member < 0 || member >= c.size()) {
    throw ParameterOutOfRange("dictatorship_equilibrium: bad member index");
  }
  const MemberSpec& m = c.members[member];
  const double p = c.prior;
  const double t = indifference_threshold(m);

  DictatorshipEquilibrium eq;
  eq.member_index = member;
  eq.thresholds = persuasion_thresholds(m, grid_n);

  const double qHigh = eq.thresholds.q_high;
  if (p < qHigh) {
    const double wHigh = p / qHigh;
    eq.lobbyist_signal = make_distribution({0.0, qHigh}, {1.0 - wHigh, wHigh});
  } else {
    eq.lobbyist_signal = degenerate(p);
  }

  // Every signal atom lies outside the open acquisition interval, so the
  // dictator votes on it directly and nobody pays an information cost.
  std::vector<double> enact(eq.lobbyist_signal.size());
  for (std::size_t k = 0; k < eq.lobbyist_signal.size(); ++k) {
    enact[k] = dictator_enact_prob(m, eq.lobbyist_signal.support[k]);
  }
  eq.outcome = outcome_from_decisions(eq.lobbyist_signal, enact, p,
                                      std::vector<double>(c.size(), 0.0));
  eq.lobbyist_payoff = eq.outcome.p_enact;

  GridFunction g;
  g.n = grid_n;
  g.values.resize(grid_n);
  const double inv = 1.0 / (grid_n - 1);
  for (int k = 0; k < grid_n; ++k) {
    g.values[k] = zeta_value(eq.thresholds, t, k * inv);
  }
  eq.enactment_fn = std::move(g);
  return eq;
}

MostDemanding most_demanding(const Committee& c, int grid_n) {
  MostDemanding result;
  result.thresholds = persuasion_thresholds_batch(c.members, grid_n);
  result.index = 0;
  result.q_hat = result.thresholds.front().q_high;
  for (int i = 1; i < c.size(); ++i) {
    if (result.thresholds[i].q_high > result.q_hat) {
      result.q_hat = result.thresholds[i].q_high;
      result.index = i;
    }
  }
  return result;
}

}  // namespace persuade
