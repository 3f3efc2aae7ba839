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

#include "persuade/preferences.hpp"

#include <algorithm>
#include <cmath>

#include "persuade/errors.hpp"

namespace persuade {
namespace {

constexpr double kLogClamp = 1e-12;

double entropy_term(double q) {
  // q ln q + (1-q) ln(1-q) + ln 2, extended by continuity at the endpoints.
  double acc = std::log(2.0);
  if (q > 0.0) acc += q * std::log(q);
  if (q < 1.0) acc += (1.0 - q) * std::log1p(-q);
  return acc;
}

}  // namespace

CostKernel CostKernel::quadratic(double alpha) {
  if (!(alpha > 0.0)) {
    throw ParameterOutOfRange("quadratic kernel requires alpha > 0");
  }
  return CostKernel(QuadraticKernel{alpha});
}

CostKernel CostKernel::scaled_entropy(double alpha) {
  if (!(alpha > 0.0)) {
    throw ParameterOutOfRange("scaled_entropy kernel requires alpha > 0");
  }
  return CostKernel(ScaledEntropyKernel{alpha});
}

CostKernel CostKernel::composite_counterexample(double u) {
  if (!(u >= 0.0)) {
    throw ParameterOutOfRange("composite_counterexample kernel requires u >= 0");
  }
  return CostKernel(CompositeCounterexampleKernel{u});
}

CostKernel CostKernel::tabulated(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) {
    throw ParameterOutOfRange("tabulated kernel needs at least two points");
  }
  std::sort(points.begin(), points.end());
  TabulatedConvexKernel t;
  t.q.reserve(points.size());
  t.c.reserve(points.size());
  for (const auto& [q, c] : points) {
    if (!(q >= 0.0 && q <= 1.0)) {
      throw ParameterOutOfRange("tabulated kernel abscissa outside [0, 1]");
    }
    if (!(c >= 0.0)) {
      throw ParameterOutOfRange("tabulated kernel requires c >= 0");
    }
    if (!t.q.empty() && !(q > t.q.back())) {
      throw ParameterOutOfRange("tabulated kernel abscissae must be strictly increasing");
    }
    t.q.push_back(q);
    t.c.push_back(c);
  }
  if (t.q.front() != 0.0 || t.q.back() != 1.0) {
    throw ParameterOutOfRange("tabulated kernel must cover [0, 1]");
  }
  // Convexity of the interpolant == nondecreasing chord slopes.
  for (std::size_t k = 2; k < t.q.size(); ++k) {
    const double s0 = (t.c[k - 1] - t.c[k - 2]) / (t.q[k - 1] - t.q[k - 2]);
    const double s1 = (t.c[k] - t.c[k - 1]) / (t.q[k] - t.q[k - 1]);
    if (s1 < s0 - 1e-12) {
      throw ParameterOutOfRange("tabulated kernel is not convex");
    }
  }
  return CostKernel(std::move(t));
}

double CostKernel::value(double q) const {
  return std::visit(
      [q](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, QuadraticKernel>) {
          return k.alpha * q * q;
        } else if constexpr (std::is_same_v<T, ScaledEntropyKernel>) {
          return k.alpha * entropy_term(q);
        } else if constexpr (std::is_same_v<T, CompositeCounterexampleKernel>) {
          return q * q + std::max(0.0, q * (1.0 + k.u) - 1.0);
        } else {
          const auto& tab = k;
          if (q <= tab.q.front()) return tab.c.front();
          if (q >= tab.q.back()) return tab.c.back();
          const auto it = std::upper_bound(tab.q.begin(), tab.q.end(), q);
          const std::size_t hi = static_cast<std::size_t>(it - tab.q.begin());
          const double lam = (q - tab.q[hi - 1]) / (tab.q[hi] - tab.q[hi - 1]);
          return tab.c[hi - 1] + lam * (tab.c[hi] - tab.c[hi - 1]);
        }
      },
      v_);
}

bool CostKernel::has_derivative() const {
  return !std::holds_alternative<TabulatedConvexKernel>(v_);
}

double CostKernel::derivative(double q) const {
  return std::visit(
      [q](const auto& k) -> double {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, QuadraticKernel>) {
          return 2.0 * k.alpha * q;
        } else if constexpr (std::is_same_v<T, ScaledEntropyKernel>) {
          const double qc = std::clamp(q, kLogClamp, 1.0 - kLogClamp);
          return k.alpha * (std::log(qc) - std::log1p(-qc));
        } else if constexpr (std::is_same_v<T, CompositeCounterexampleKernel>) {
          const double s = 1.0 + k.u;
          return 2.0 * q + (q * s >= 1.0 ? s : 0.0);
        } else {
          const auto& tab = k;
          const double qc = std::min(q, tab.q.back());
          auto it = std::upper_bound(tab.q.begin(), tab.q.end(), qc);
          std::size_t hi = static_cast<std::size_t>(it - tab.q.begin());
          if (hi == tab.q.size()) --hi;
          if (hi == 0) hi = 1;
          return (tab.c[hi] - tab.c[hi - 1]) / (tab.q[hi] - tab.q[hi - 1]);
        }
      },
      v_);
}

std::string CostKernel::family_name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, QuadraticKernel>) {
          return "quadratic";
        } else if constexpr (std::is_same_v<T, ScaledEntropyKernel>) {
          return "scaled_entropy";
        } else if constexpr (std::is_same_v<T, CompositeCounterexampleKernel>) {
          return "composite_counterexample";
        } else {
          return "tabulated_convex";
        }
      },
      v_);
}

MemberSpec make_member(double u, CostKernel kernel) {
  if (!(u >= 0.0)) {
    throw ParameterOutOfRange("member payoff u must be >= 0");
  }
  return MemberSpec{u, std::move(kernel)};
}

Committee make_committee(std::vector<MemberSpec> members, double prior) {
  if (members.empty()) {
    throw ParameterOutOfRange("committee must have at least one member");
  }
  if (!(prior > 0.0 && prior < 1.0)) {
    throw ParameterOutOfRange("prior must lie in the open interval (0, 1)");
  }
  return Committee{std::move(members), prior};
}

double indifference_threshold(const MemberSpec& m) { return 1.0 / (1.0 + m.u); }

double enact_payoff(const MemberSpec& m, Belief q) {
  return q * (1.0 + m.u) - 1.0;
}

double preferred_payoff(const MemberSpec& m, Belief q) {
  return std::max(0.0, enact_payoff(m, q));
}

double info_cost(const CostKernel& kernel, const BeliefDistribution& mu) {
  double acc = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    acc += mu.weights[k] * kernel.value(mu.support[k]);
  }
  acc -= kernel.value(mu.mean());
  return acc > 0.0 ? acc : 0.0;
}

double info_cost(const MemberSpec& m, const BeliefDistribution& mu) {
  return info_cost(m.kernel, mu);
}

}  // namespace persuade
