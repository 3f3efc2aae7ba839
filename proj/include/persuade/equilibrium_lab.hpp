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

#ifndef PERSUADE_EQUILIBRIUM_LAB_HPP_
#define PERSUADE_EQUILIBRIUM_LAB_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "persuade/belief.hpp"
#include "persuade/dictatorship.hpp"
#include "persuade/mechanisms.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/preferences.hpp"

namespace persuade {

// Payoff a member expects in the voting subgame at posterior q when her
// peers hold no private information and vote to enact: she secures the full
// enactment payoff above her indifference threshold, and can push the
// enactment probability down to d_min below it.
double continuation_payoff(const MemberSpec& m, Belief q, double d_min);

// Per-member results of checking the no-information/vote-enact equilibrium at
// interim beliefs weakly above the most demanding member's threshold:
//  - no sampled binary Bayes-plausible deviation beats acquiring nothing,
//    net of its information cost (max_net_deviation_gain);
//  - the Jensen bound on the continuation-minus-preferred surplus holds on
//    the same deviations (max_expected_surplus);
//  - that surplus is concave in the posterior (grid second differences);
//  - voting to enact is optimal at q = r;
//  - the member's own upper threshold of persuasion is within q_hat.
struct MemberEquilibriumCheck {
  double max_net_deviation_gain = 0.0;
  double max_expected_surplus = 0.0;
  bool concavity_ok = false;
  bool vote_enact_ok = false;
  bool no_acquisition_ok = false;
};

struct EquilibriumCheckReport {
  double q_hat = 0.0;
  std::vector<MemberEquilibriumCheck> per_member;
  int grid_n = 0;
  int samples = 0;
  double tolerance = 1e-8;

  bool holds() const;
  double max_violation() const;
};

struct EquilibriumCheckOptions {
  int grid_n = 1001;             // interim-belief grid on [q_hat, 1]
  int samples = 200;             // random deviations per grid point
  std::uint64_t seed = 0;
  int threshold_grid_n = kDefaultGridN;
};

// OpenMP-parallel verification kernel (over interim-belief grid points; one
// RNG stream per (member, grid point), so results do not depend on the
// schedule), plus a plain serial reference that must produce bit-identical
// reports.
EquilibriumCheckReport verify_equilibrium_strategies(
    const Committee& c, const VotingMechanism& mech,
    const EquilibriumCheckOptions& opts = {});
EquilibriumCheckReport verify_equilibrium_strategies_serial(
    const Committee& c, const VotingMechanism& mech,
    const EquilibriumCheckOptions& opts = {});

// Outcome when the lobbyist runs the experiment tailored to the most
// demanding member's dictatorship and members follow the verified strategies:
// identical for every valid mechanism on the same committee.
OutcomeStats benchmark_signal_outcome(const Committee& c,
                                      const VotingMechanism& mech, int grid_n);

enum class DominanceOutcome { kADominates, kBDominates, kEquivalent, kIncomparable };

const char* to_string(DominanceOutcome v);

// Coordinate-wise comparison per the dominance partial order: better at
// blocking bad policies, better at enacting good ones, and weakly cheaper
// for every member.
struct DominanceVerdict {
  bool a_blocks_bad_ge = false;   // a.p_enact_bad <= b.p_enact_bad
  bool a_enacts_good_ge = false;  // a.p_enact_good >= b.p_enact_good
  bool a_costs_le = false;        // every member weakly cheaper under a
  bool a_weakly_better = false;   // all three of the above
  bool b_weakly_better = false;   // the symmetric comparison
  DominanceOutcome verdict = DominanceOutcome::kIncomparable;
};

DominanceVerdict dominance_compare(const OutcomeStats& a, const OutcomeStats& b);

struct AuditRow {
  std::string mechanism;
  int dictator = -1;  // -1 when the mechanism is not a dictatorship
  bool strategies_ok = false;
  double max_strategy_violation = 0.0;
  OutcomeStats outcome;
  double lobbyist_payoff = 0.0;
  double benchmark_payoff = 0.0;
  bool payoff_at_least_benchmark = false;
  DominanceOutcome verdict = DominanceOutcome::kIncomparable;
};

struct AuditTable {
  int mhat_index = 0;
  double q_hat = 0.0;
  OutcomeStats mhat_outcome;
  std::vector<AuditRow> rows;

  bool all_dominated_or_tied() const;
};

// For each catalog mechanism: verifies the equilibrium strategies, computes
// the benchmark outcome, the mechanism's equilibrium outcome where known
// (dictatorships; the benchmark otherwise), and compares it to the most
// demanding member's dictatorship.
AuditTable dominance_audit(const Committee& c,
                           const std::vector<VotingMechanism>& catalog,
                           const EquilibriumCheckOptions& opts = {});

struct ExperimentMenu {
  std::vector<BeliefDistribution> distributions;
};

// Validates the common-mean invariant (within kMeanMatchTolerance).
ExperimentMenu make_menu(std::vector<BeliefDistribution> distributions);

struct InformativenessRecord {
  double payoff_mu = 0.0;
  double payoff_benchmark = 0.0;
  bool bound_holds = false;
  // Atoms below q_hat strictly inside some non-dictator member's acquisition
  // interval, where continuation play is not pinned down.
  std::vector<double> flagged_atoms;
};

// Checks that a signal more informative (convex order) than the benchmark
// two-point signal cannot pay the lobbyist more, pricing atoms below q_hat by
// the most demanding member's continuation enactment. Throws NotComparable
// unless mu weakly dominates the benchmark signal in convex order.
InformativenessRecord informativeness_payoff_check(const Committee& c,
                                                    const VotingMechanism& mech,
                                                    const BeliefDistribution& mu,
                                                    int grid_n);

struct ConstrainedBest {
  int chosen_index = -1;
  BeliefDistribution chosen;
  double payoff = 0.0;
  OutcomeStats outcome;
};

// Best menu entry for a lobbyist restricted to a finite experiment set,
// against a dictatorship: atoms inside the dictator's open acquisition
// interval are re-split to her thresholds (she pays the cost), atoms outside
// are voted on directly. Ties break toward the earlier menu entry. Throws
// EmptyMenu / NotADictatorship.
ConstrainedBest constrained_lobbyist_best(const Committee& c,
                                          const VotingMechanism& mech,
                                          const ExperimentMenu& menu,
                                          int grid_n);

// One pass/fail line of a golden-value report. Numeric rows compare against
// `expected` at `tolerance`; label rows compare rendered strings.
struct GoldenEntry {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double abs_err = 0.0;
  double tolerance = 0.0;
  std::string expected_label;
  std::string actual_label;
  bool numeric = true;
  bool pass = false;
};

struct GoldenReport {
  std::vector<GoldenEntry> entries;
  bool all_pass() const;
};

// Golden regression for the built-in two-member constrained-menu committee:
// degenerate persuasion thresholds at 0.8 and 0.6, the six conditional
// probabilities and payoffs, and mutual non-dominance of the two
// dictatorships under the menu.
GoldenReport counterexample_check();

// Same checks evaluated on a caller-supplied committee/menu (values are
// still compared against the built-in goldens; perturbed inputs fail).
GoldenReport counterexample_check(const Committee& c, const ExperimentMenu& menu,
                                  int grid_n, double tolerance);

// The built-in committee and menu used by counterexample_check().
Committee counterexample_committee();
ExperimentMenu counterexample_menu();

}  // namespace persuade

#endif  // PERSUADE_EQUILIBRIUM_LAB_HPP_
