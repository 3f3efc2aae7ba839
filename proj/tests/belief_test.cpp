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

#include "persuade/belief.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "persuade/errors.hpp"
#include "persuade/random.hpp"

namespace persuade {
namespace {

// Two conditionally independent binary signals simulated through explicit
// likelihoods; the posterior after both "high" outcomes is the oracle for the
// odds-product aggregation.
double two_signal_bayes_oracle(double r, double q1, double q2) {
  auto likelihoods = [&](double q) {
    // Choose P(high | good) = x and solve P(high | bad) = y so that the
    // posterior after "high" equals q: y = x * r (1 - q) / (q (1 - r)).
    const double x = 0.5;
    const double y = x * r * (1.0 - q) / (q * (1.0 - r));
    return std::array<double, 2>{x, y};
  };
  const auto [x1, y1] = likelihoods(q1);
  const auto [x2, y2] = likelihoods(q2);
  const double num = r * x1 * x2;
  const double den = num + (1.0 - r) * y1 * y2;
  return num / den;
}

// Random mixture of Bayes-plausible binary splits; the mean equals `mean` by
// construction.
BeliefDistribution random_mean_fixed(SplitMix64& rng, double mean, int parts) {
  std::vector<double> support, weights;
  double remaining = 1.0;
  for (int i = 0; i < parts; ++i) {
    const double share = (i + 1 == parts) ? remaining : remaining * rng.uniform(0.2, 0.8);
    remaining -= (i + 1 == parts) ? 0.0 : share;
    if (rng.uniform() < 0.2) {
      support.push_back(mean);
      weights.push_back(share);
      continue;
    }
    const double lo = rng.uniform(0.0, mean);
    const double hi = rng.uniform(mean, 1.0);
    const double wHi = (hi > lo) ? (mean - lo) / (hi - lo) : 0.5;
    support.push_back(lo);
    weights.push_back(share * (1.0 - wHi));
    support.push_back(hi);
    weights.push_back(share * wHi);
  }
  return make_distribution(support, weights);
}

TEST_CASE("degenerate distributions") {
  const BeliefDistribution d = degenerate(0.5);
  CHECK(d.support == std::vector<double>{0.5});
  CHECK(d.weights == std::vector<double>{1.0});

  const BeliefDistribution zero = degenerate(0.0);
  CHECK(zero.support == std::vector<double>{0.0});

  CHECK(degenerate(0.8).mean() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(degenerate(1.5), RangeError);
}

TEST_CASE("make_distribution validates and normalises") {
  const BeliefDistribution mu2 =
      make_distribution({0.0, 0.6}, {1.0 / 6.0, 5.0 / 6.0});
  CHECK(mu2.mean() == doctest::Approx(0.5).epsilon(1e-14));

  const BeliefDistribution mu1 = make_distribution({0.2, 0.8}, {0.5, 0.5});
  CHECK(mu1.mean() == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(make_distribution({0.3}, {0.9}), WeightSumError);
  CHECK_THROWS_AS(make_distribution({-0.1, 0.5}, {0.5, 0.5}), RangeError);
  CHECK_THROWS_AS(make_distribution({0.1, 0.5}, {-0.5, 1.5}), RangeError);

  // Unsorted input is sorted; zero-weight atoms are dropped; duplicates merge.
  const BeliefDistribution sorted = make_distribution({0.9, 0.1}, {0.25, 0.75});
  CHECK(sorted.support == std::vector<double>{0.1, 0.9});

  const BeliefDistribution dropped = make_distribution({0.2, 0.8}, {0.0, 1.0});
  CHECK(dropped.size() == 1);
  CHECK(dropped.support[0] == 0.8);

  const BeliefDistribution merged =
      make_distribution({0.5, 0.5 + 1e-13}, {0.5, 0.5});
  CHECK(merged.size() == 1);
  CHECK(merged.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(merged.mean() == doctest::Approx(0.5 + 0.5e-13).epsilon(1e-14));
}

TEST_CASE("state conditional decomposition matches Bayes arithmetic") {
  const BeliefDistribution mu1 = make_distribution({0.2, 0.8}, {0.5, 0.5});
  const StateConditionals c1 = state_conditional_decomposition(mu1, 0.5);
  CHECK(c1.given_good.weight_at(0.8) == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(c1.given_bad.weight_at(0.2) == doctest::Approx(0.8).epsilon(1e-14));

  const BeliefDistribution mu2 =
      make_distribution({0.0, 0.6}, {1.0 / 6.0, 5.0 / 6.0});
  const StateConditionals c2 = state_conditional_decomposition(mu2, 0.5);
  CHECK(c2.given_good.is_degenerate());
  CHECK(c2.given_good.weight_at(0.6) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c2.given_bad.weight_at(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const StateConditionals cd = state_conditional_decomposition(degenerate(0.3), 0.3);
  CHECK(cd.given_good.weight_at(0.3) == 1.0);
  CHECK(cd.given_bad.weight_at(0.3) == 1.0);

  CHECK_THROWS_AS(state_conditional_decomposition(mu1, 0.6), NotBayesPlausible);
  CHECK_THROWS_AS(state_conditional_decomposition(degenerate(1.0), 1.0), PriorBoundary);
}

TEST_CASE("decomposition round-trip reproduces the distribution") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = rng.uniform(0.05, 0.95);
    const BeliefDistribution mu = random_mean_fixed(rng, p, 1 + trial % 3);
    CHECK(std::abs(mu.mean() - p) < 1e-9);  // martingale property
    const StateConditionals c = state_conditional_decomposition(mu, p);
    for (std::size_t k = 0; k < mu.size(); ++k) {
      const double atom = mu.support[k];
      const double recombined = p * c.given_good.weight_at(atom) +
                                (1.0 - p) * c.given_bad.weight_at(atom);
      CHECK(recombined == doctest::Approx(mu.weights[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("aggregate_posteriors examples") {
  const std::vector<double> flat{0.5, 0.5};
  CHECK(aggregate_posteriors(0.5, flat) == doctest::Approx(0.5).epsilon(1e-14));

  const std::vector<double> one{0.8, 0.5};
  CHECK(aggregate_posteriors(0.5, one) == doctest::Approx(0.8).epsilon(1e-12));

  const std::vector<double> two{0.8, 0.8};
  CHECK(aggregate_posteriors(0.5, two) ==
        doctest::Approx(16.0 / 17.0).epsilon(1e-12));
}

TEST_CASE("aggregate_posteriors agrees with an explicit two-signal model") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const double r = rng.uniform(0.05, 0.95);
    const double q1 = rng.uniform(0.05, 0.95);
    const double q2 = rng.uniform(0.05, 0.95);
    const std::vector<double> qs{q1, q2};
    CHECK(aggregate_posteriors(r, qs) ==
          doctest::Approx(two_signal_bayes_oracle(r, q1, q2)).epsilon(1e-10));
  }
}

TEST_CASE("aggregate_posteriors identity and boundaries") {
  for (int k = 0; k <= 1000; ++k) {
    const double r = 0.0005 + (0.999 * k) / 1000.0;
    const std::vector<double> qs{r, r, r};
    CHECK(std::abs(aggregate_posteriors(r, qs) - r) < 1e-12);
  }
  const std::vector<double> conclusiveBad{0.0, 0.7};
  CHECK(aggregate_posteriors(0.5, conclusiveBad) == 0.0);
  const std::vector<double> conclusiveGood{0.3, 1.0};
  CHECK(aggregate_posteriors(0.5, conclusiveGood) == 1.0);
  const std::vector<double> conflict{0.0, 1.0};
  CHECK_THROWS_AS(aggregate_posteriors(0.5, conflict), InconsistentEvidence);
}

TEST_CASE("convex order unit verdicts") {
  const BeliefDistribution full = make_distribution({0.0, 1.0}, {0.5, 0.5});
  const BeliefDistribution point = degenerate(0.5);
  CHECK(convex_order_compare(full, point) == ConvexOrder::kDominates);
  CHECK(convex_order_compare(point, full) == ConvexOrder::kDominatedBy);

  const BeliefDistribution mu1 = make_distribution({0.2, 0.8}, {0.5, 0.5});
  const BeliefDistribution mu2 =
      make_distribution({0.0, 0.6}, {1.0 / 6.0, 5.0 / 6.0});
  CHECK(convex_order_compare(mu1, mu2) == ConvexOrder::kIncomparable);
  // Cross-check by scanning the tail integrals on a t grid.
  bool mu1WinsSomewhere = false, mu2WinsSomewhere = false;
  for (int k = 0; k <= 100; ++k) {
    const double t = k / 100.0;
    const double a = upper_tail_integral(mu1, t);
    const double b = upper_tail_integral(mu2, t);
    if (a > b + 1e-12) mu1WinsSomewhere = true;
    if (b > a + 1e-12) mu2WinsSomewhere = true;
  }
  CHECK(mu1WinsSomewhere);
  CHECK(mu2WinsSomewhere);

  CHECK(convex_order_compare(mu1, mu1) == ConvexOrder::kEqual);
  CHECK_THROWS_AS(convex_order_compare(mu1, degenerate(0.3)), MeanMismatch);
}

TEST_CASE("convex order is a partial order on mean-0.5 distributions") {
  SplitMix64 rng(37);
  int transitiveChecked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const BeliefDistribution a = random_mean_fixed(rng, 0.5, 1 + trial % 2);
    const BeliefDistribution b = random_mean_fixed(rng, 0.5, 1 + (trial / 2) % 2);
    const BeliefDistribution c = random_mean_fixed(rng, 0.5, 1);

    CHECK(convex_order_compare(a, a) == ConvexOrder::kEqual);

    const ConvexOrder ab = convex_order_compare(a, b);
    const ConvexOrder ba = convex_order_compare(b, a);
    if (ab == ConvexOrder::kDominates) CHECK(ba == ConvexOrder::kDominatedBy);
    if (ab == ConvexOrder::kEqual) CHECK(ba == ConvexOrder::kEqual);

    const ConvexOrder bc = convex_order_compare(b, c);
    if (ab == ConvexOrder::kDominates && bc == ConvexOrder::kDominates) {
      ++transitiveChecked;
      CHECK(convex_order_compare(a, c) == ConvexOrder::kDominates);
    }
  }
  CHECK(transitiveChecked > 0);
}

TEST_CASE("full revelation dominates, the point mass is dominated") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const double p = rng.uniform(0.1, 0.9);
    const BeliefDistribution full = make_distribution({0.0, 1.0}, {1.0 - p, p});
    const BeliefDistribution mu = random_mean_fixed(rng, p, 1 + trial % 3);
    const ConvexOrder top = convex_order_compare(full, mu);
    CHECK((top == ConvexOrder::kDominates || top == ConvexOrder::kEqual));
    const ConvexOrder bottom = convex_order_compare(degenerate(p), mu);
    CHECK((bottom == ConvexOrder::kDominatedBy || bottom == ConvexOrder::kEqual));
  }
}

}  // namespace
}  // namespace persuade
