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

// Acceptance suite. Each criterion prints one pass/fail line; the process
// exits nonzero if any criterion fails. An optional argv[1] overrides the
// base seed (default 0); the determinism criterion reruns the whole suite
// with the same seed and compares the serialized reports byte for byte.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "persuade/belief.hpp"
#include "persuade/dictatorship.hpp"
#include "persuade/equilibrium_lab.hpp"
#include "persuade/parallel.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/preferences.hpp"
#include "persuade/random.hpp"

namespace {

using namespace persuade;
using Clock = std::chrono::steady_clock;

struct CriterionResult {
  bool pass = false;
  std::string detail;
  std::string report;  // deterministic serialization, no timings
};

void append_num(std::string& s, const char* tag, double v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s=%.17g\n", tag, v);
  s += buf;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Random model generators (all streams derived from the base seed).

struct RandomMember {
  double u, alpha, prior;
};

std::vector<RandomMember> criterion2_members(std::uint64_t seed) {
  SplitMix64 rng(derive_seed(seed, 2));
  std::vector<RandomMember> out;
  for (int i = 0; i < 100; ++i) {
    RandomMember m;
    m.u = rng.uniform(0.0, 2.0);
    m.alpha = rng.uniform(0.1, 3.0);
    m.prior = rng.uniform(0.001, 0.999);
    out.push_back(m);
  }
  return out;
}

Committee random_committee(SplitMix64& rng) {
  const int n = 1 + static_cast<int>(rng.next() % 3);
  std::vector<MemberSpec> members;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform(0.0, 2.0);
    const double roll = rng.uniform();
    if (roll < 0.70) {
      members.push_back(make_member(u, CostKernel::quadratic(rng.uniform(0.1, 3.0))));
    } else if (roll < 0.88) {
      members.push_back(make_member(u, CostKernel::scaled_entropy(rng.uniform(0.2, 2.0))));
    } else {
      members.push_back(make_member(u, CostKernel::composite_counterexample(u)));
    }
  }
  return make_committee(std::move(members), rng.uniform(0.05, 0.95));
}

std::vector<Committee> criterion5_committees(std::uint64_t seed) {
  SplitMix64 rng(derive_seed(seed, 5));
  std::vector<Committee> out;
  for (int i = 0; i < 50; ++i) out.push_back(random_committee(rng));
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 1: golden reproduction of the built-in constrained-menu committee.

CriterionResult criterion1(std::uint64_t) {
  const auto start = Clock::now();
  const GoldenReport report = counterexample_check();
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();

  CriterionResult res;
  double maxErr = 0.0;
  for (const GoldenEntry& e : report.entries) {
    if (e.numeric) {
      maxErr = std::max(maxErr, e.abs_err);
      append_num(res.report, e.name.c_str(), e.actual);
    } else {
      res.report += e.name + "=" + e.actual_label + "\n";
    }
  }
  res.pass = report.all_pass() && elapsed < 1.0;
  res.detail = "max |err| " + fmt(maxErr) + ", " + fmt(elapsed) + " s";
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 2: the lobbyist signal law and its payoff against the fine-grid
// concavification oracle.

CriterionResult criterion2(std::uint64_t seed) {
  const auto start = Clock::now();
  const std::vector<RandomMember> members = criterion2_members(seed);
  constexpr int kOracleGridN = 4'000'001;

  struct Row {
    bool law_ok;
    double payoff, oracle;
  };
  std::vector<Row> rows(members.size());
  parallel_for(static_cast<std::int64_t>(members.size()), [&](std::int64_t i) {
    const RandomMember& rm = members[i];
    const Committee c =
        make_committee({make_member(rm.u, CostKernel::quadratic(rm.alpha))}, rm.prior);
    const DictatorshipEquilibrium eq = dictatorship_equilibrium(c, 0, kDefaultGridN);
    const double qHigh = eq.thresholds.q_high;

    bool law = true;
    if (rm.prior < qHigh) {
      law = eq.lobbyist_signal.size() == 2 &&
            eq.lobbyist_signal.support[0] == 0.0 &&
            eq.lobbyist_signal.support[1] == qHigh;
    } else {
      law = eq.lobbyist_signal.is_degenerate() &&
            eq.lobbyist_signal.support[0] == rm.prior;
    }
    const double expected = std::min(1.0, rm.prior / qHigh);
    law = law && std::abs(eq.lobbyist_payoff - expected) <= 1e-9;

    const double t = indifference_threshold(c.members[0]);
    const PersuasionThresholds th = eq.thresholds;
    const double oracle = grid_envelope_value(
        kOracleGridN, [&](double r) { return zeta_value(th, t, r); }, rm.prior);
    rows[i] = Row{law, eq.lobbyist_payoff, oracle};
  });
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();

  CriterionResult res;
  bool lawOk = true;
  double maxGap = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    lawOk = lawOk && rows[i].law_ok;
    maxGap = std::max(maxGap, std::abs(rows[i].payoff - rows[i].oracle));
    append_num(res.report, ("payoff[" + std::to_string(i) + "]").c_str(), rows[i].payoff);
    append_num(res.report, ("oracle[" + std::to_string(i) + "]").c_str(), rows[i].oracle);
  }
  res.pass = lawOk && maxGap <= 1e-6 && elapsed < 10.0;
  res.detail = "max |payoff - oracle| " + fmt(maxGap) + ", " + fmt(elapsed) + " s";
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 3: threshold bracketing on the same members, and the degenerate
// collapse of quadratic-plus-hinge kernels.

CriterionResult criterion3(std::uint64_t seed) {
  CriterionResult res;
  bool ok = true;
  double maxCollapseErr = 0.0;

  for (const RandomMember& rm : criterion2_members(seed)) {
    const MemberSpec m = make_member(rm.u, CostKernel::quadratic(rm.alpha));
    const PersuasionThresholds th = persuasion_thresholds(m, kDefaultGridN);
    const double t = indifference_threshold(m);
    ok = ok && th.q_low <= t + 1e-12 && th.q_high >= t - 1e-12;
    append_num(res.report, "q_low", th.q_low);
    append_num(res.report, "q_high", th.q_high);
  }

  SplitMix64 rng(derive_seed(seed, 3));
  for (int i = 0; i < 30; ++i) {
    const double u = rng.uniform(0.0, 2.0);
    const MemberSpec m = make_member(u, CostKernel::composite_counterexample(u));
    const PersuasionThresholds th = persuasion_thresholds(m, kDefaultGridN);
    const double t = 1.0 / (1.0 + u);
    maxCollapseErr = std::max(maxCollapseErr,
                              std::max(std::abs(th.q_low - t), std::abs(th.q_high - t)));
    append_num(res.report, "collapsed_q", th.q_high);
  }
  ok = ok && maxCollapseErr <= 1e-9;
  res.pass = ok;
  res.detail = "max collapse error " + fmt(maxCollapseErr);
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 4: envelope values versus O(n^2) chord maximisation.

CriterionResult criterion4(std::uint64_t seed) {
  const auto start = Clock::now();
  SplitMix64 rng(derive_seed(seed, 4));

  CriterionResult res;
  double maxGap = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int knots = 4 + static_cast<int>(rng.next() % 10);
    std::vector<double> xs{0.0, 1.0}, ys;
    for (int i = 0; i < knots; ++i) xs.push_back(rng.uniform());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(rng.uniform(-1.0, 1.0));
    const GridFunction f = GridFunction::sample(501, [&](double q) {
      const auto it = std::upper_bound(xs.begin(), xs.end(), q);
      const std::size_t hi = std::min<std::size_t>(it - xs.begin(), xs.size() - 1);
      const std::size_t lo = hi == 0 ? 0 : hi - 1;
      if (hi == lo) return ys[lo];
      const double lam = (q - xs[lo]) / (xs[hi] - xs[lo]);
      return ys[lo] + lam * (ys[hi] - ys[lo]);
    });
    const GridFunction env = upper_concave_envelope(f);

    for (int j = 0; j < 20; ++j) {
      const double p = rng.uniform(0.005, 0.995);
      double brute = f.value_at(p);
      for (int a = 0; a < f.n && f.x(a) <= p; ++a) {
        for (int b = f.n - 1; b >= 0 && f.x(b) >= p; --b) {
          if (a == b) continue;
          const double lam = (p - f.x(a)) / (f.x(b) - f.x(a));
          brute = std::max(brute, f.values[a] + lam * (f.values[b] - f.values[a]));
        }
      }
      maxGap = std::max(maxGap, std::abs(env.value_at(p) - brute));
      append_num(res.report, "env", env.value_at(p));
    }
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  res.pass = maxGap <= 1e-8 && elapsed < 5.0;
  res.detail = "max |env - brute| " + fmt(maxGap) + ", " + fmt(elapsed) + " s";
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 5: equilibrium-strategy verification across random committees and
// the full mechanism catalog.

CriterionResult criterion5(std::uint64_t seed) {
  const auto start = Clock::now();
  const std::vector<Committee> committees = criterion5_committees(seed);

  CriterionResult res;
  double maxViolation = 0.0;
  bool allHold = true;
  int rows = 0;
  for (std::size_t ci = 0; ci < committees.size(); ++ci) {
    const Committee& c = committees[ci];
    EquilibriumCheckOptions opts;
    opts.grid_n = 1001;
    opts.samples = 200;
    opts.seed = derive_seed(seed, 50, ci);
    for (const VotingMechanism& mech : full_catalog(c.size())) {
      const EquilibriumCheckReport report = verify_equilibrium_strategies(c, mech, opts);
      allHold = allHold && report.holds();
      maxViolation = std::max(maxViolation, report.max_violation());
      append_num(res.report, "max_strategy_violation", report.max_violation());
      append_num(res.report, "q_hat", report.q_hat);
      ++rows;
    }
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  res.pass = allHold && maxViolation <= 1e-8 && elapsed < 60.0;
  res.detail = std::to_string(rows) + " mechanism checks, max violation " +
               fmt(maxViolation) + ", " + fmt(elapsed) + " s";
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 6: the dominance audit never finds a mechanism beating the most
// demanding member's dictatorship.

CriterionResult criterion6(std::uint64_t seed) {
  const auto start = Clock::now();
  const std::vector<Committee> committees = criterion5_committees(seed);

  CriterionResult res;
  bool allOk = true;
  int rows = 0;
  for (std::size_t ci = 0; ci < committees.size(); ++ci) {
    const Committee& c = committees[ci];
    EquilibriumCheckOptions opts;
    opts.grid_n = 201;  // verdicts do not depend on the sampling density
    opts.samples = 50;
    opts.seed = derive_seed(seed, 60, ci);
    const AuditTable table = dominance_audit(c, full_catalog(c.size()), opts);
    for (const AuditRow& row : table.rows) {
      const bool rowOk = (row.verdict == DominanceOutcome::kADominates ||
                          row.verdict == DominanceOutcome::kEquivalent) &&
                         row.payoff_at_least_benchmark;
      allOk = allOk && rowOk;
      res.report += row.mechanism + ":" + to_string(row.verdict) + "\n";
      ++rows;
    }
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  res.pass = allOk;
  res.detail = std::to_string(rows) + " audit rows, " + fmt(elapsed) + " s";
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 7: more informative signals never pay the lobbyist more.

CriterionResult criterion7(std::uint64_t seed) {
  const std::vector<Committee> committees = criterion5_committees(seed);
  SplitMix64 rng(derive_seed(seed, 7));

  CriterionResult res;
  bool allHold = true;
  double worstGap = -1.0;
  for (const Committee& c : committees) {
    const MostDemanding mhat = most_demanding(c, kDefaultGridN);
    const double p = c.prior;
    const double qHat = mhat.q_hat;
    const VotingMechanism mech = make_catalog_mechanism(Unanimity{}, c.size());
    for (int k = 0; k < 20; ++k) {
      // Mean-preserving spread of the benchmark signal.
      std::vector<double> support, weights;
      if (p < qHat) {
        const double wHigh = p / qHat;
        support.push_back(0.0);
        weights.push_back(1.0 - wHigh);
        if (qHat < 1.0 && rng.uniform() < 0.9) {
          const double x = rng.uniform(0.0, qHat);
          const double y = rng.uniform(qHat, 1.0);
          const double lam = (qHat - x) / (y - x);
          support.push_back(x);
          weights.push_back(wHigh * (1.0 - lam));
          support.push_back(y);
          weights.push_back(wHigh * lam);
        } else {
          support.push_back(qHat);
          weights.push_back(wHigh);
        }
      } else {
        const double x = rng.uniform(0.0, p);
        const double y = rng.uniform(p, 1.0);
        const double lam = (p - x) / (y - x);
        support = {x, y};
        weights = {1.0 - lam, lam};
      }
      const BeliefDistribution mu = make_distribution(support, weights);
      const InformativenessRecord rec = informativeness_payoff_check(c, mech, mu, kDefaultGridN);
      allHold = allHold && rec.bound_holds;
      worstGap = std::max(worstGap, rec.payoff_mu - rec.payoff_benchmark);
      append_num(res.report, "payoff_mu", rec.payoff_mu);
    }
  }
  res.pass = allHold && worstGap <= 1e-9;
  res.detail = "worst payoff excess " + fmt(worstGap);
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 8: the convex-order unit verdicts.

CriterionResult criterion8(std::uint64_t) {
  CriterionResult res;
  const BeliefDistribution full = make_distribution({0.0, 1.0}, {0.5, 0.5});
  const BeliefDistribution point = degenerate(0.5);
  const BeliefDistribution mu1 = make_distribution({0.2, 0.8}, {0.5, 0.5});
  const BeliefDistribution mu2 =
      make_distribution({0.0, 0.6}, {1.0 / 6.0, 5.0 / 6.0});

  bool ok = convex_order_compare(full, point) == ConvexOrder::kDominates;
  ok = ok && convex_order_compare(full, mu1) == ConvexOrder::kDominates;
  ok = ok && convex_order_compare(full, mu2) == ConvexOrder::kDominates;
  ok = ok && convex_order_compare(point, mu1) == ConvexOrder::kDominatedBy;
  ok = ok && convex_order_compare(point, mu2) == ConvexOrder::kDominatedBy;
  ok = ok && convex_order_compare(mu1, mu2) == ConvexOrder::kIncomparable;
  ok = ok && convex_order_compare(mu2, mu1) == ConvexOrder::kIncomparable;
  res.pass = ok;
  res.detail = ok ? "all verdicts correct" : "verdict mismatch";
  res.report += std::string("mu1_vs_mu2=") + to_string(convex_order_compare(mu1, mu2)) + "\n";
  return res;
}

using CriterionFn = CriterionResult (*)(std::uint64_t);

struct NamedCriterion {
  int number;
  const char* description;
  CriterionFn fn;
};

const NamedCriterion kCriteria[] = {
    {1, "golden reproduction of the built-in committee (tol 1e-9, < 1 s)", criterion1},
    {2, "lobbyist signal law and concavification oracle (tol 1e-6, < 10 s)", criterion2},
    {3, "threshold bracketing and degenerate collapse (tol 1e-9)", criterion3},
    {4, "envelope equals O(n^2) chord maximisation (tol 1e-8, < 5 s)", criterion4},
    {5, "equilibrium-strategy verification on random committees (tol 1e-8, < 60 s)", criterion5},
    {6, "dominance audit of the full catalog", criterion6},
    {7, "informative spreads never raise the lobbyist payoff (tol 1e-9)", criterion7},
    {8, "convex-order unit verdicts", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed =
      argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0ULL;

  bool allPass = true;
  std::string firstReports, secondReports;
  for (const NamedCriterion& c : kCriteria) {
    const CriterionResult r = c.fn(seed);
    allPass = allPass && r.pass;
    firstReports += r.report;
    std::printf("[%s] criterion %d: %s (%s)\n", r.pass ? "PASS" : "FAIL",
                c.number, c.description, r.detail.c_str());
    std::fflush(stdout);
  }

  // Criterion 9: rerun the full suite with the same seed; the serialized
  // reports must be byte-identical.
  for (const NamedCriterion& c : kCriteria) {
    secondReports += c.fn(seed).report;
  }
  const bool deterministic = firstReports == secondReports;
  allPass = allPass && deterministic;
  std::printf("[%s] criterion 9: two runs with the same seed are byte-identical (%zu bytes compared)\n",
              deterministic ? "PASS" : "FAIL", firstReports.size());

  return allPass ? 0 : 1;
}
