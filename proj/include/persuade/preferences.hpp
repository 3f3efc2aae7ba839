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

#ifndef PERSUADE_PREFERENCES_HPP_
#define PERSUADE_PREFERENCES_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "persuade/belief.hpp"

namespace persuade {

// Convex kernel c underlying a uniformly posterior-separable information
// cost C(mu) = E_mu[c(q)] - c(E_mu[q]). Four families: a scaled quadratic,
// a scaled entropy (shifted so its minimum is zero), quadratic-plus-hinge
// ("composite counterexample", c(q) = q^2 + max{0, q(1+u) - 1}), and a
// tabulated convex kernel with linear interpolation.
struct QuadraticKernel {
  double alpha;  // > 0
};

struct ScaledEntropyKernel {
  double alpha;  // > 0; c(0) = c(1) = alpha*ln 2 by continuous extension
};

struct CompositeCounterexampleKernel {
  double u;  // >= 0
};

struct TabulatedConvexKernel {
  std::vector<double> q;  // strictly increasing, q.front() == 0, q.back() == 1
  std::vector<double> c;  // >= 0, slopes nondecreasing
};

class CostKernel {
 public:
  using Variant = std::variant<QuadraticKernel, ScaledEntropyKernel,
                               CompositeCounterexampleKernel,
                               TabulatedConvexKernel>;

  static CostKernel quadratic(double alpha);
  static CostKernel scaled_entropy(double alpha);
  static CostKernel composite_counterexample(double u);
  static CostKernel tabulated(std::vector<std::pair<double, double>> points);

  double value(double q) const;

  // True for the closed-form families, where threshold refinement can use
  // one-sided derivatives; false for tabulated kernels (grid precision only).
  bool has_derivative() const;
  // Derivative of c; right-sided at kinks.
  double derivative(double q) const;

  const Variant& family() const { return v_; }
  std::string family_name() const;

 private:
  explicit CostKernel(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// A committee member: payoff u >= 0 from enacting a good policy (a bad one
// costs 1, blocking pays 0) and her information cost kernel.
struct MemberSpec {
  double u;
  CostKernel kernel;
};

MemberSpec make_member(double u, CostKernel kernel);

struct Committee {
  std::vector<MemberSpec> members;
  double prior;  // in (0, 1)

  int size() const { return static_cast<int>(members.size()); }
};

Committee make_committee(std::vector<MemberSpec> members, double prior);

// Belief at which enacting and blocking give the same expected payoff.
double indifference_threshold(const MemberSpec& m);

// Absolute slack when testing a posterior against an indifference threshold:
// the tie at equality goes to enactment, and thresholds like 1/(1+u) carry
// one-ulp noise that must not flip the tie.
inline constexpr double kIndifferenceTie = 1e-12;

// Expected payoff of enacting at posterior q: q(1 + u) - 1.
double enact_payoff(const MemberSpec& m, Belief q);

// Payoff of the preferred action: max{0, q(1 + u) - 1}; convex and piecewise
// linear with a kink at the indifference threshold.
double preferred_payoff(const MemberSpec& m, Belief q);

// Uniformly posterior-separable information cost of the experiment inducing
// mu. Nonnegative by Jensen; tiny negative rounding is clamped to zero.
double info_cost(const CostKernel& kernel, const BeliefDistribution& mu);
double info_cost(const MemberSpec& m, const BeliefDistribution& mu);

}  // namespace persuade

#endif  // PERSUADE_PREFERENCES_HPP_
