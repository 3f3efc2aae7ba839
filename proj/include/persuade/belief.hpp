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

#ifndef PERSUADE_BELIEF_HPP_
#define PERSUADE_BELIEF_HPP_

#include <span>
#include <string>
#include <vector>

namespace persuade {

// Probability assigned to the good state; always in [0, 1].
using Belief = double;

// Two-state world: the policy is either bad or good.
enum class StateLabel { kBad = 0, kGood = 1 };

inline constexpr double kWeightSumTolerance = 1e-12;
inline constexpr double kAtomMergeTolerance = 1e-12;
inline constexpr double kMeanMatchTolerance = 1e-9;

// Finite-support probability distribution over beliefs. Invariants (enforced
// by make_distribution): support strictly increasing within [0, 1], weights
// strictly positive and summing to one.
struct BeliefDistribution {
  std::vector<double> support;
  std::vector<double> weights;

  std::size_t size() const { return support.size(); }
  bool is_degenerate() const { return support.size() == 1; }
  double mean() const;
  // Weight carried by `atom`, or 0 when `atom` is not in the support.
  double weight_at(double atom, double tol = kAtomMergeTolerance) const;
  std::string to_string() const;
};

// Point mass at b.
BeliefDistribution degenerate(Belief b);

// Validates, sorts, merges atoms closer than kAtomMergeTolerance, drops
// zero-weight atoms and renormalises. Throws RangeError for atoms or weights
// outside range, WeightSumError when |sum(weights) - 1| > kWeightSumTolerance.
BeliefDistribution make_distribution(std::vector<double> support,
                                     std::vector<double> weights);

// Distribution of the realised belief conditional on each state, obtained by
// Bayes rule: P(r | good) = w(r) r / p and P(r | bad) = w(r)(1 - r)/(1 - p).
// Mixing them back with weights (p, 1 - p) reproduces mu atom by atom.
struct StateConditionals {
  BeliefDistribution given_good;
  BeliefDistribution given_bad;
};

// Throws PriorBoundary when prior is not interior and NotBayesPlausible when
// mean(mu) differs from prior by more than kMeanMatchTolerance.
StateConditionals state_conditional_decomposition(const BeliefDistribution& mu,
                                                  Belief prior);

// Posterior on the good state held by an observer who sees the public interim
// belief r plus every private posterior in `posteriors`, assuming the private
// experiments are independent conditional on the state. Computed as a product
// of odds ratios in log space. Conclusive posteriors (0 or 1) override the
// product; conflicting conclusive evidence throws InconsistentEvidence.
Belief aggregate_posteriors(Belief r, std::span<const Belief> posteriors);

enum class ConvexOrder { kDominates, kDominatedBy, kEqual, kIncomparable };

const char* to_string(ConvexOrder order);

// Convex order between finite-support distributions with a common mean: mu
// dominates nu iff the upper-tail integral E[max(q - t, 0)] under mu weakly
// exceeds the one under nu at every t. Both integrands are piecewise linear
// in t, so checking t in the union of the supports plus {0, 1} is exact. For
// binary-state experiments this is Blackwell informativeness. Throws
// MeanMismatch when the means differ by more than kMeanMatchTolerance.
ConvexOrder convex_order_compare(const BeliefDistribution& mu,
                                 const BeliefDistribution& nu);

// E[max(q - t, 0)] under mu.
double upper_tail_integral(const BeliefDistribution& mu, double t);

}  // namespace persuade

#endif  // PERSUADE_BELIEF_HPP_
