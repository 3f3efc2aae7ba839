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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "persuade/errors.hpp"

namespace persuade {

double BeliefDistribution::mean() const {
  double m = 0.0;
  for (std::size_t k = 0; k < support.size(); ++k) m += support[k] * weights[k];
  return m;
}

double BeliefDistribution::weight_at(double atom, double tol) const {
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (std::abs(support[k] - atom) <= tol) return weights[k];
  }
  return 0.0;
}

std::string BeliefDistribution::to_string() const {
  std::string out = "{";
  char buf[64];
  for (std::size_t k = 0; k < support.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%s%.12g:%.12g", k == 0 ? "" : ", ",
                  support[k], weights[k]);
    out += buf;
  }
  out += "}";
  return out;
}

BeliefDistribution degenerate(Belief b) {
  if (!(b >= 0.0 && b <= 1.0)) {
    throw RangeError("degenerate: belief outside [0, 1]");
  }
  return BeliefDistribution{{b}, {1.0}};
}

BeliefDistribution make_distribution(std::vector<double> support,
                                     std::vector<double> weights) {
  if (support.empty() || support.size() != weights.size()) {
    throw RangeError("make_distribution: support/weight lists must be nonempty and of equal length");
  }
  for (double q : support) {
    if (!(q >= 0.0 && q <= 1.0)) {
      throw RangeError("make_distribution: belief atom outside [0, 1]");
    }
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw RangeError("make_distribution: negative weight");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw WeightSumError("make_distribution: weights sum to " +
                         std::to_string(sum) + ", expected 1");
  }

  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return support[a] < support[b];
  });

  // Merge near-duplicate atoms at their weight-averaged location so the mean
  // is preserved, then drop anything with zero mass.
  BeliefDistribution out;
  for (std::size_t idx : order) {
    const double q = support[idx];
    const double w = weights[idx];
    if (w == 0.0) continue;
    if (!out.support.empty() && q - out.support.back() <= kAtomMergeTolerance) {
      const double wOld = out.weights.back();
      out.support.back() = (out.support.back() * wOld + q * w) / (wOld + w);
      out.weights.back() += w;
    } else {
      out.support.push_back(q);
      out.weights.push_back(w);
    }
  }
  if (out.support.empty()) {
    throw WeightSumError("make_distribution: all weights are zero");
  }
  double total = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
  for (double& w : out.weights) w /= total;
  return out;
}

StateConditionals state_conditional_decomposition(const BeliefDistribution& mu,
                                                  Belief prior) {
  if (!(prior > 0.0 && prior < 1.0)) {
    throw PriorBoundary("state_conditional_decomposition: prior must be interior");
  }
  const double mean = mu.mean();
  if (std::abs(mean - prior) > kMeanMatchTolerance) {
    throw NotBayesPlausible(
        "state_conditional_decomposition: mean " + std::to_string(mean) +
        " does not match prior " + std::to_string(prior));
  }
  std::vector<double> goodW(mu.size()), badW(mu.size());
  double goodSum = 0.0, badSum = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    goodW[k] = mu.weights[k] * mu.support[k] / prior;
    badW[k] = mu.weights[k] * (1.0 - mu.support[k]) / (1.0 - prior);
    goodSum += goodW[k];
    badSum += badW[k];
  }
  for (std::size_t k = 0; k < mu.size(); ++k) {
    goodW[k] /= goodSum;
    badW[k] /= badSum;
  }
  return StateConditionals{make_distribution(mu.support, std::move(goodW)),
                           make_distribution(mu.support, std::move(badW))};
}

namespace {

double logit(double q) { return std::log(q) - std::log1p(-q); }

}  // namespace

Belief aggregate_posteriors(Belief r, std::span<const Belief> posteriors) {
  bool sawZero = false, sawOne = false;
  for (double q : posteriors) {
    if (!(q >= 0.0 && q <= 1.0)) {
      throw RangeError("aggregate_posteriors: posterior outside [0, 1]");
    }
    sawZero = sawZero || q == 0.0;
    sawOne = sawOne || q == 1.0;
  }
  if (r == 0.0) sawZero = true;
  if (r == 1.0) sawOne = true;
  if (sawZero && sawOne) {
    throw InconsistentEvidence(
        "aggregate_posteriors: conclusive evidence for both states");
  }
  if (sawZero) return 0.0;
  if (sawOne) return 1.0;

  // log-odds of the pooled posterior; private signals enter as likelihood
  // ratios relative to the shared interim belief.
  const double base = logit(r);
  double total = base;
  for (double q : posteriors) total += logit(q) - base;
  return 1.0 / (1.0 + std::exp(-total));
}

double upper_tail_integral(const BeliefDistribution& mu, double t) {
  double acc = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double excess = mu.support[k] - t;
    if (excess > 0.0) acc += mu.weights[k] * excess;
  }
  return acc;
}

const char* to_string(ConvexOrder order) {
  switch (order) {
    case ConvexOrder::kDominates: return "Dominates";
    case ConvexOrder::kDominatedBy: return "DominatedBy";
    case ConvexOrder::kEqual: return "Equal";
    case ConvexOrder::kIncomparable: return "Incomparable";
  }
  return "?";
}

ConvexOrder convex_order_compare(const BeliefDistribution& mu,
                                 const BeliefDistribution& nu) {
  if (std::abs(mu.mean() - nu.mean()) > kMeanMatchTolerance) {
    throw MeanMismatch("convex_order_compare: distributions have different means");
  }
  std::vector<double> ts;
  ts.reserve(mu.size() + nu.size() + 2);
  ts.push_back(0.0);
  ts.push_back(1.0);
  ts.insert(ts.end(), mu.support.begin(), mu.support.end());
  ts.insert(ts.end(), nu.support.begin(), nu.support.end());

  constexpr double kTol = 1e-12;
  bool muGe = true, nuGe = true;
  for (double t : ts) {
    const double a = upper_tail_integral(mu, t);
    const double b = upper_tail_integral(nu, t);
    if (a < b - kTol) muGe = false;
    if (b < a - kTol) nuGe = false;
  }
  if (muGe && nuGe) return ConvexOrder::kEqual;
  if (muGe) return ConvexOrder::kDominates;
  if (nuGe) return ConvexOrder::kDominatedBy;
  return ConvexOrder::kIncomparable;
}

}  // namespace persuade
