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

#include "persuade/equilibrium_lab.hpp"

#include <algorithm>
#include <cmath>

#include "persuade/errors.hpp"
#include "persuade/parallel.hpp"
#include "persuade/random.hpp"

namespace persuade {

double continuation_payoff(const MemberSpec& m, Belief q, double d_min) {
  if (!(d_min >= 0.0 && d_min <= 1.0)) {
    throw ParameterOutOfRange("continuation_payoff: d_min outside [0, 1]");
  }
  const double payoff = enact_payoff(m, q);
  if (q >= indifference_threshold(m) - kIndifferenceTie) return payoff;
  return d_min * payoff;
}

bool EquilibriumCheckReport::holds() const {
  for (const MemberEquilibriumCheck& c : per_member) {
    if (c.max_net_deviation_gain > tolerance) return false;
    if (c.max_expected_surplus > tolerance) return false;
    if (!c.concavity_ok || !c.vote_enact_ok || !c.no_acquisition_ok) return false;
  }
  return true;
}

double EquilibriumCheckReport::max_violation() const {
  double v = 0.0;
  for (const MemberEquilibriumCheck& c : per_member) {
    v = std::max(v, std::max(c.max_net_deviation_gain, c.max_expected_surplus));
  }
  return v;
}

namespace {

struct EquilibriumCheckContext {
  const Committee* committee = nullptr;
  MostDemanding mhat;
  std::vector<double> d_min;  // per member, given peers' enact votes
};

EquilibriumCheckContext build_check_context(const Committee& c,
                                            const VotingMechanism& mech,
                                            const EquilibriumCheckOptions& opts) {
  if (mech.n_members() != c.size()) {
    throw SizeMismatch(
        "verify_equilibrium_strategies: mechanism size differs from committee");
  }
  const MechanismValidation validation = validate_mechanism(mech);
  if (!validation.ok) {
    throw ValidationError("verify_equilibrium_strategies: mechanism invalid (" +
                          (validation.violations.empty()
                               ? std::string("?")
                               : validation.violations.front()) +
                          ")");
  }
  EquilibriumCheckContext ctx;
  ctx.committee = &c;
  ctx.mhat = most_demanding(c, opts.threshold_grid_n);
  const std::vector<int>& enactProfile = *validation.enact_profile;
  ctx.d_min.resize(c.size());
  for (int i = 0; i < c.size(); ++i) {
    std::vector<int> others;
    others.reserve(c.size() - 1);
    for (int j = 0; j < c.size(); ++j) {
      if (j != i) others.push_back(enactProfile[j]);
    }
    ctx.d_min[i] = pivotal_bounds(mech, i, others).d_min;
  }
  return ctx;
}

// Checks one (member, interim-grid-point) cell; RNG stream derived from
// (seed, member, grid index).
struct CellViolations {
  double net_gain = 0.0;
  double surplus_mean = 0.0;
};

CellViolations check_cell(const MemberSpec& m, double d_min, double r,
                          std::uint64_t cell_seed, int samples) {
  SplitMix64 rng(cell_seed);
  CellViolations out;
  const double payoffAtR = enact_payoff(m, r);  // r >= q_hat >= threshold
  const double costAtR = m.kernel.value(r);
  auto surplus = [&](double q) {
    // pi-tilde: continuation surplus net of the single-agent surplus.
    return continuation_payoff(m, q, d_min) - preferred_payoff(m, q);
  };
  for (int s = 0; s < samples; ++s) {
    const double a = rng.uniform(0.0, r);
    const double b = rng.uniform(r, 1.0);
    const double span = b - a;
    const double wb = span > 0.0 ? (r - a) / span : 1.0;
    const double wa = 1.0 - wb;
    const double cost =
        wa * m.kernel.value(a) + wb * m.kernel.value(b) - costAtR;
    const double gain = wa * continuation_payoff(m, a, d_min) +
                        wb * continuation_payoff(m, b, d_min) - payoffAtR;
    out.net_gain = std::max(out.net_gain, gain - std::max(cost, 0.0));
    out.surplus_mean = std::max(out.surplus_mean, wa * surplus(a) + wb * surplus(b));
  }
  return out;
}

bool surplus_concavity_ok(const MemberSpec& m, double d_min, int grid_n) {
  // The surplus is piecewise linear in q with its only kink at the
  // indifference threshold; adjacent second differences expose any convex
  // kink.
  const double inv = 1.0 / (grid_n - 1);
  auto surplus = [&](double q) {
    return continuation_payoff(m, q, d_min) - preferred_payoff(m, q);
  };
  double prev = surplus(0.0);
  double cur = surplus(inv);
  for (int k = 1; k + 1 < grid_n; ++k) {
    const double next = surplus((k + 1) * inv);
    if (next - 2.0 * cur + prev > 1e-10) return false;
    prev = cur;
    cur = next;
  }
  return true;
}

template <bool kParallel>
EquilibriumCheckReport run_equilibrium_check(const Committee& c,
                                             const VotingMechanism& mech,
                                             const EquilibriumCheckOptions& opts) {
  if (opts.grid_n < 2 || opts.samples < 1) {
    throw ParameterOutOfRange(
        "verify_equilibrium_strategies: grid_n >= 2 and samples >= 1 required");
  }
  const EquilibriumCheckContext ctx = build_check_context(c, mech, opts);
  const double qHat = ctx.mhat.q_hat;

  EquilibriumCheckReport report;
  report.q_hat = qHat;
  report.grid_n = opts.grid_n;
  report.samples = opts.samples;
  report.per_member.resize(c.size());

  const double span = 1.0 - qHat;
  const double step = span / (opts.grid_n - 1);

  for (int i = 0; i < c.size(); ++i) {
    const MemberSpec& m = c.members[i];
    MemberEquilibriumCheck& check = report.per_member[i];
    check.no_acquisition_ok = ctx.mhat.thresholds[i].q_high <= qHat + 1e-12;
    check.concavity_ok = surplus_concavity_ok(m, ctx.d_min[i], opts.grid_n);
    check.vote_enact_ok = enact_payoff(m, qHat) >= -1e-12;

    std::vector<double> v1(opts.grid_n), v3(opts.grid_n);
    auto body = [&](std::int64_t k) {
      const double r = qHat + step * static_cast<double>(k);
      const CellViolations cell =
          check_cell(m, ctx.d_min[i], r,
                     derive_seed(opts.seed, static_cast<std::uint64_t>(i),
                                 static_cast<std::uint64_t>(k)),
                     opts.samples);
      v1[k] = cell.net_gain;
      v3[k] = cell.surplus_mean;
    };
    if constexpr (kParallel) {
      parallel_for(opts.grid_n, body);
    } else {
      for (std::int64_t k = 0; k < opts.grid_n; ++k) body(k);
    }
    for (int k = 0; k < opts.grid_n; ++k) {
      check.max_net_deviation_gain = std::max(check.max_net_deviation_gain, v1[k]);
      check.max_expected_surplus = std::max(check.max_expected_surplus, v3[k]);
    }
  }
  return report;
}

}  // namespace

EquilibriumCheckReport verify_equilibrium_strategies(
    const Committee& c, const VotingMechanism& mech,
    const EquilibriumCheckOptions& opts) {
  return run_equilibrium_check<true>(c, mech, opts);
}

EquilibriumCheckReport verify_equilibrium_strategies_serial(
    const Committee& c, const VotingMechanism& mech,
    const EquilibriumCheckOptions& opts) {
  return run_equilibrium_check<false>(c, mech, opts);
}

OutcomeStats benchmark_signal_outcome(const Committee& c,
                                      const VotingMechanism& mech, int grid_n) {
  const MechanismValidation validation = validate_mechanism(mech);
  if (!validation.ok) {
    throw ValidationError("benchmark_signal_outcome: mechanism invalid");
  }
  const MostDemanding mhat = most_demanding(c, grid_n);
  const double p = c.prior;
  const double qHat = mhat.q_hat;

  BeliefDistribution signal;
  std::vector<double> enact;
  if (p < qHat) {
    const double wHigh = p / qHat;
    signal = make_distribution({0.0, qHat}, {1.0 - wHigh, wHigh});
    // At conclusive bad news every member blocks; at q_hat every member
    // votes for the enacting profile. The witnesses carry the probabilities.
    enact = {mech.decide(*validation.block_profile),
             mech.decide(*validation.enact_profile)};
  } else {
    signal = degenerate(p);
    enact = {mech.decide(*validation.enact_profile)};
  }
  return outcome_from_decisions(signal, enact, p,
                                std::vector<double>(c.size(), 0.0));
}

const char* to_string(DominanceOutcome v) {
  switch (v) {
    case DominanceOutcome::kADominates: return "ADominates";
    case DominanceOutcome::kBDominates: return "BDominates";
    case DominanceOutcome::kEquivalent: return "Equivalent";
    case DominanceOutcome::kIncomparable: return "Incomparable";
  }
  return "?";
}

DominanceVerdict dominance_compare(const OutcomeStats& a, const OutcomeStats& b) {
  if (a.expected_cost.size() != b.expected_cost.size()) {
    throw SizeMismatch("dominance_compare: cost vectors differ in length");
  }
  constexpr double kTol = 1e-12;
  auto costs_le = [&](const OutcomeStats& x, const OutcomeStats& y) {
    for (std::size_t j = 0; j < x.expected_cost.size(); ++j) {
      if (x.expected_cost[j] > y.expected_cost[j] + kTol) return false;
    }
    return true;
  };
  DominanceVerdict v;
  v.a_blocks_bad_ge = a.p_enact_bad <= b.p_enact_bad + kTol;
  v.a_enacts_good_ge = a.p_enact_good >= b.p_enact_good - kTol;
  v.a_costs_le = costs_le(a, b);
  v.a_weakly_better = v.a_blocks_bad_ge && v.a_enacts_good_ge && v.a_costs_le;
  v.b_weakly_better = b.p_enact_bad <= a.p_enact_bad + kTol &&
                      b.p_enact_good >= a.p_enact_good - kTol && costs_le(b, a);
  if (v.a_weakly_better && v.b_weakly_better) {
    v.verdict = DominanceOutcome::kEquivalent;
  } else if (v.a_weakly_better) {
    v.verdict = DominanceOutcome::kADominates;
  } else if (v.b_weakly_better) {
    v.verdict = DominanceOutcome::kBDominates;
  } else {
    v.verdict = DominanceOutcome::kIncomparable;
  }
  return v;
}

bool AuditTable::all_dominated_or_tied() const {
  return std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) {
    return r.verdict == DominanceOutcome::kADominates ||
           r.verdict == DominanceOutcome::kEquivalent;
  });
}

AuditTable dominance_audit(const Committee& c,
                           const std::vector<VotingMechanism>& catalog,
                           const EquilibriumCheckOptions& opts) {
  AuditTable table;
  const MostDemanding mhat = most_demanding(c, opts.threshold_grid_n);
  table.mhat_index = mhat.index;
  table.q_hat = mhat.q_hat;
  const DictatorshipEquilibrium mhatEq =
      dictatorship_equilibrium(c, mhat.index, opts.threshold_grid_n);
  table.mhat_outcome = mhatEq.outcome;

  for (const VotingMechanism& mech : catalog) {
    AuditRow row;
    row.mechanism = mech.name.empty() ? "table" : mech.name;

    const EquilibriumCheckReport check =
        verify_equilibrium_strategies(c, mech, opts);
    row.strategies_ok = check.holds();
    row.max_strategy_violation = check.max_violation();

    const OutcomeStats benchmark =
        benchmark_signal_outcome(c, mech, opts.threshold_grid_n);
    row.benchmark_payoff = benchmark.p_enact;

    // The lobbyist-preferred equilibrium is known in closed form for
    // dictatorships; for other mechanisms the selected equilibrium plays the
    // benchmark signal.
    const std::optional<int> dict = is_dictatorship(mech);
    if (dict) {
      row.dictator = *dict;
      const DictatorshipEquilibrium eq =
          dictatorship_equilibrium(c, *dict, opts.threshold_grid_n);
      row.outcome = eq.outcome;
      row.lobbyist_payoff = eq.lobbyist_payoff;
    } else {
      row.outcome = benchmark;
      row.lobbyist_payoff = benchmark.p_enact;
    }
    row.payoff_at_least_benchmark =
        row.lobbyist_payoff >= row.benchmark_payoff - 1e-12;
    row.verdict = dominance_compare(table.mhat_outcome, row.outcome).verdict;
    table.rows.push_back(std::move(row));
  }
  return table;
}

ExperimentMenu make_menu(std::vector<BeliefDistribution> distributions) {
  if (distributions.empty()) {
    throw EmptyMenu("experiment menu must contain at least one distribution");
  }
  const double mean0 = distributions.front().mean();
  for (const BeliefDistribution& d : distributions) {
    if (std::abs(d.mean() - mean0) > kMeanMatchTolerance) {
      throw MeanMismatch("experiment menu entries have different means");
    }
  }
  return ExperimentMenu{std::move(distributions)};
}

InformativenessRecord informativeness_payoff_check(const Committee& c,
                                                    const VotingMechanism& mech,
                                                    const BeliefDistribution& mu,
                                                    int grid_n) {
  const MostDemanding mhat = most_demanding(c, grid_n);
  const double p = c.prior;
  const double qHat = mhat.q_hat;
  const MemberSpec& star = c.members[mhat.index];
  const double tStar = indifference_threshold(star);

  BeliefDistribution benchmark;
  if (p < qHat) {
    const double wHigh = p / qHat;
    benchmark = make_distribution({0.0, qHat}, {1.0 - wHigh, wHigh});
  } else {
    benchmark = degenerate(p);
  }

  const ConvexOrder order = convex_order_compare(mu, benchmark);
  if (order != ConvexOrder::kDominates && order != ConvexOrder::kEqual) {
    throw NotComparable(
        "informativeness_payoff_check: mu is not more informative than the benchmark signal");
  }

  InformativenessRecord rec;
  rec.payoff_benchmark = std::min(1.0, p / qHat);

  const std::optional<int> dict = is_dictatorship(mech);
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double r = mu.support[k];
    double e;
    if (r >= qHat - kIndifferenceTie) {
      e = 1.0;
    } else {
      // Most the continuation can enact by the most demanding member's
      // thresholds: re-splitting inside her interval, blocking below it.
      e = zeta_value(mhat.thresholds[mhat.index], tStar, r);
      for (int j = 0; j < c.size(); ++j) {
        if (dict && *dict == j) continue;
        const PersuasionThresholds& th = mhat.thresholds[j];
        if (!th.degenerate() && r > th.q_low && r < th.q_high) {
          rec.flagged_atoms.push_back(r);
          break;
        }
      }
    }
    rec.payoff_mu += mu.weights[k] * e;
  }
  rec.bound_holds = rec.payoff_mu <= rec.payoff_benchmark + 1e-9;
  return rec;
}

ConstrainedBest constrained_lobbyist_best(const Committee& c,
                                          const VotingMechanism& mech,
                                          const ExperimentMenu& menu,
                                          int grid_n) {
  if (menu.distributions.empty()) {
    throw EmptyMenu("constrained_lobbyist_best: empty menu");
  }
  const std::optional<int> dict = is_dictatorship(mech);
  if (!dict) {
    throw NotADictatorship(
        "constrained_lobbyist_best: only dictatorial mechanisms are supported");
  }
  const int d = *dict;
  const MemberSpec& m = c.members[d];
  const PersuasionThresholds th = persuasion_thresholds(m, grid_n);

  ConstrainedBest best;
  for (std::size_t idx = 0; idx < menu.distributions.size(); ++idx) {
    const BeliefDistribution& mu = menu.distributions[idx];
    if (std::abs(mu.mean() - c.prior) > kMeanMatchTolerance) {
      throw NotBayesPlausible(
          "constrained_lobbyist_best: menu entry mean differs from the prior");
    }

    // Dictator's response: atoms strictly inside (q_low, q_high) re-split to
    // the thresholds (she pays that experiment's cost), others are voted on
    // directly.
    std::vector<double> atoms, weights;
    double dictatorCost = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
      const double r = mu.support[k];
      const double w = mu.weights[k];
      if (!th.degenerate() && r > th.q_low && r < th.q_high) {
        const BeliefDistribution split = dictator_info_strategy(m, th, r);
        for (std::size_t s = 0; s < split.size(); ++s) {
          atoms.push_back(split.support[s]);
          weights.push_back(w * split.weights[s]);
        }
        dictatorCost += w * info_cost(m, split);
      } else {
        atoms.push_back(r);
        weights.push_back(w);
      }
    }
    const BeliefDistribution finalBeliefs =
        make_distribution(std::move(atoms), std::move(weights));
    std::vector<double> enact(finalBeliefs.size());
    for (std::size_t k = 0; k < finalBeliefs.size(); ++k) {
      enact[k] = dictator_enact_prob(m, finalBeliefs.support[k]);
    }
    std::vector<double> costs(c.size(), 0.0);
    costs[d] = dictatorCost;
    OutcomeStats outcome =
        outcome_from_decisions(finalBeliefs, enact, c.prior, std::move(costs));

    if (best.chosen_index < 0 || outcome.p_enact > best.payoff) {
      best.chosen_index = static_cast<int>(idx);
      best.chosen = mu;
      best.payoff = outcome.p_enact;
      best.outcome = std::move(outcome);
    }
  }
  return best;
}

Committee counterexample_committee() {
  const double u1 = 0.25;
  const double u2 = 2.0 / 3.0;
  return make_committee(
      {make_member(u1, CostKernel::composite_counterexample(u1)),
       make_member(u2, CostKernel::composite_counterexample(u2))},
      0.5);
}

ExperimentMenu counterexample_menu() {
  return make_menu({make_distribution({0.2, 0.8}, {0.5, 0.5}),
                    make_distribution({0.0, 0.6}, {1.0 / 6.0, 5.0 / 6.0})});
}

namespace {

GoldenEntry numeric_entry(std::string name, double expected, double actual,
                          double tol) {
  GoldenEntry e;
  e.name = std::move(name);
  e.expected = expected;
  e.actual = actual;
  e.abs_err = std::abs(actual - expected);
  e.tolerance = tol;
  e.numeric = true;
  e.pass = e.abs_err <= tol;
  return e;
}

GoldenEntry label_entry(std::string name, std::string expected, std::string actual) {
  GoldenEntry e;
  e.name = std::move(name);
  e.expected_label = std::move(expected);
  e.actual_label = std::move(actual);
  e.numeric = false;
  e.pass = e.expected_label == e.actual_label;
  return e;
}

}  // namespace

bool GoldenReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const GoldenEntry& e) { return e.pass; });
}

GoldenReport counterexample_check(const Committee& c, const ExperimentMenu& menu,
                                  int grid_n, double tol) {
  GoldenReport report;
  if (c.size() != 2 || menu.distributions.size() != 2) {
    report.entries.push_back(
        label_entry("shape", "2 members, 2 menu entries",
                    std::to_string(c.size()) + " members, " +
                        std::to_string(menu.distributions.size()) + " menu entries"));
    return report;
  }

  const auto th = persuasion_thresholds_batch(c.members, grid_n);
  report.entries.push_back(numeric_entry("m1.q_low", 0.8, th[0].q_low, tol));
  report.entries.push_back(numeric_entry("m1.q_high", 0.8, th[0].q_high, tol));
  report.entries.push_back(numeric_entry("m2.q_low", 0.6, th[1].q_low, tol));
  report.entries.push_back(numeric_entry("m2.q_high", 0.6, th[1].q_high, tol));

  const auto dict1 = make_catalog_mechanism(Dictatorship{0}, 2);
  const auto dict2 = make_catalog_mechanism(Dictatorship{1}, 2);
  const ConstrainedBest best1 = constrained_lobbyist_best(c, dict1, menu, grid_n);
  const ConstrainedBest best2 = constrained_lobbyist_best(c, dict2, menu, grid_n);

  report.entries.push_back(label_entry(
      "m1_dictatorship.chosen", "menu[0]",
      "menu[" + std::to_string(best1.chosen_index) + "]"));
  report.entries.push_back(label_entry(
      "m2_dictatorship.chosen", "menu[1]",
      "menu[" + std::to_string(best2.chosen_index) + "]"));

  report.entries.push_back(numeric_entry("mu1.enact_given_good", 0.8,
                                         best1.outcome.p_enact_good, tol));
  report.entries.push_back(numeric_entry("mu1.block_given_bad", 0.8,
                                         1.0 - best1.outcome.p_enact_bad, tol));
  report.entries.push_back(numeric_entry("mu2.enact_given_good", 1.0,
                                         best2.outcome.p_enact_good, tol));
  report.entries.push_back(numeric_entry("mu2.block_given_bad", 1.0 / 3.0,
                                         1.0 - best2.outcome.p_enact_bad, tol));
  report.entries.push_back(
      numeric_entry("m1_dictatorship.payoff", 0.5, best1.payoff, tol));
  report.entries.push_back(
      numeric_entry("m2_dictatorship.payoff", 5.0 / 6.0, best2.payoff, tol));

  const DominanceVerdict v12 = dominance_compare(best1.outcome, best2.outcome);
  report.entries.push_back(label_entry("m1_dict vs m2_dict", "Incomparable",
                                       to_string(v12.verdict)));
  return report;
}

GoldenReport counterexample_check() {
  return counterexample_check(counterexample_committee(), counterexample_menu(),
                              kDefaultGridN, 1e-9);
}

}  // namespace persuade
