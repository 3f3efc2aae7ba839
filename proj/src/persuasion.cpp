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

#include "persuade/persuasion.hpp"

#include <algorithm>
#include <cmath>

#include "persuade/errors.hpp"
#include "persuade/parallel.hpp"

namespace persuade {

GridFunction GridFunction::sample(int n, const std::function<double(double)>& f) {
  if (n < 3) throw ParameterOutOfRange("GridFunction needs n >= 3");
  GridFunction g;
  g.n = n;
  g.values.resize(n);
  const double inv = 1.0 / (n - 1);
  parallel_for(n, [&](std::int64_t k) { g.values[k] = f(k * inv); });
  return g;
}

double GridFunction::value_at(double r) const {
  if (r <= 0.0) return values.front();
  if (r >= 1.0) return values.back();
  const double pos = r * (n - 1);
  int k = static_cast<int>(pos);
  if (k >= n - 1) k = n - 2;
  const double lam = pos - k;
  return values[k] + lam * (values[k + 1] - values[k]);
}

std::vector<int> upper_hull_vertices(const GridFunction& f) {
  std::vector<int> hull;
  hull.reserve(64);
  for (int k = 0; k < f.n; ++k) {
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2];
      const int j = hull.back();
      // Drop j when it lies on or below chord i->k.
      const double cross = (static_cast<double>(k - i)) * (f.values[j] - f.values[i]) -
                           (static_cast<double>(j - i)) * (f.values[k] - f.values[i]);
      if (cross <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  return hull;
}

GridFunction upper_concave_envelope(const GridFunction& f) {
  const std::vector<int> hull = upper_hull_vertices(f);
  GridFunction env;
  env.n = f.n;
  env.values.resize(f.n);
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int i = hull[s];
    const int j = hull[s + 1];
    const double slope = (f.values[j] - f.values[i]) / (j - i);
    for (int k = i; k < j; ++k) {
      env.values[k] = f.values[i] + slope * (k - i);
    }
  }
  env.values[f.n - 1] = f.values[f.n - 1];
  // Interpolation noise must never push the envelope below the function.
  for (int k = 0; k < f.n; ++k) {
    if (env.values[k] < f.values[k]) env.values[k] = f.values[k];
  }
  return env;
}

namespace {

// Objective whose concave envelope contact set gives the thresholds of
// persuasion: f(q) = max{0, q(1+u) - 1} - c(q). Concave on either side of the
// indifference kink (c is convex), so the envelope departs from f on a single
// interval bracketing the kink and the bridge is a bitangent line.
struct PersuasionObjective {
  double s;  // 1 + u
  const CostKernel* kernel;

  double value(double q) const {
    return std::max(0.0, q * s - 1.0) - kernel->value(q);
  }
  double slope(double q) const {
    return (q * s >= 1.0 ? s : 0.0) - kernel->derivative(q);
  }
};

constexpr double kBranchNudge = 1e-13;
constexpr int kBisectIters = 80;
constexpr int kAlternateIters = 120;

// Left contact of the bridge through (b, fb): the point a in [0, t] where the
// tangent of f at a passes through (b, fb). The residual
// h(a) = f(a) + f'(a)(b - a) - fb is nonincreasing on the concave branch, so
// bisection applies; no sign change pins the contact to a branch endpoint.
double solve_left_contact(const PersuasionObjective& f, double t, double b,
                          double fb) {
  auto resid = [&](double a) { return f.value(a) + f.slope(a) * (b - a) - fb; };
  double lo = 0.0;
  double hi = std::max(0.0, t - kBranchNudge);
  if (resid(lo) <= 0.0) return 0.0;
  if (resid(hi) >= 0.0) return t;
  for (int i = 0; i < kBisectIters && hi - lo > kRefineTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    (resid(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Right contact of the bridge through (a, fa); mirror of the above with a
// nondecreasing residual.
double solve_right_contact(const PersuasionObjective& f, double t, double a,
                           double fa) {
  auto resid = [&](double b) { return f.value(b) + f.slope(b) * (a - b) - fa; };
  double lo = std::min(1.0, t + kBranchNudge);
  double hi = 1.0;
  if (resid(hi) <= 0.0) return 1.0;
  if (resid(lo) >= 0.0) return t;
  for (int i = 0; i < kBisectIters && hi - lo > kRefineTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    (resid(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PersuasionThresholds persuasion_thresholds(const MemberSpec& m, int grid_n) {
  if (grid_n < kMinThresholdGridN) {
    throw ParameterOutOfRange("persuasion_thresholds requires grid_n >= 1001");
  }
  const double t = indifference_threshold(m);
  const PersuasionObjective obj{1.0 + m.u, &m.kernel};

  GridFunction f;
  f.n = grid_n;
  f.values.resize(grid_n);
  const double inv = 1.0 / (grid_n - 1);
  for (int k = 0; k < grid_n; ++k) f.values[k] = obj.value(k * inv);
  const GridFunction env = upper_concave_envelope(f);

  const double h = f.step();
  auto contact = [&](int k) {
    return env.values[k] - f.values[k] <= kContactTolerance;
  };

  // Flat pieces: a hull edge spanning two or more cells whose interior points
  // all sit on the edge means the member is indifferent between stopping and
  // spreading to the edge's endpoints there.
  bool flat = false;
  {
    const std::vector<int> hull = upper_hull_vertices(f);
    for (std::size_t s = 0; s + 1 < hull.size() && !flat; ++s) {
      const int i = hull[s];
      const int j = hull[s + 1];
      if (j - i < 2) continue;
      bool onEdge = true;
      for (int k = i + 1; k < j && onEdge; ++k) {
        onEdge = contact(k);
      }
      flat = onEdge;
    }
  }

  int ktLow = static_cast<int>(t * (grid_n - 1));  // largest k with x_k <= t
  if (ktLow > grid_n - 1) ktLow = grid_n - 1;
  int ktHigh = (f.x(ktLow) >= t) ? ktLow : ktLow + 1;
  if (ktHigh > grid_n - 1) ktHigh = grid_n - 1;

  int a0 = ktLow;
  while (a0 > 0 && !contact(a0)) --a0;
  int b0 = ktHigh;
  while (b0 < grid_n - 1 && !contact(b0)) ++b0;

  // Contact cells adjacent across the kink: the objective is concave there
  // and the thresholds collapse to the indifference point.
  if (f.x(b0) - f.x(a0) <= 1.5 * h) {
    return PersuasionThresholds{t, t, flat};
  }

  double qLow = f.x(a0);
  double qHigh = f.x(b0);
  if (m.kernel.has_derivative()) {
    double a = std::min(qLow, t);
    double b = std::max(qHigh, t);
    for (int iter = 0; iter < kAlternateIters; ++iter) {
      const double bNew = solve_right_contact(obj, t, a, obj.value(a));
      const double aNew = solve_left_contact(obj, t, bNew, obj.value(bNew));
      const double moved = std::abs(aNew - a) + std::abs(bNew - b);
      a = aNew;
      b = bNew;
      if (moved < kRefineTolerance) break;
    }
    if (b - a <= 1e-9) return PersuasionThresholds{t, t, flat};
    qLow = a;
    qHigh = b;
  }

  PersuasionThresholds th;
  th.q_low = std::clamp(std::min(qLow, t), 0.0, 1.0);
  th.q_high = std::clamp(std::max(qHigh, t), 0.0, 1.0);
  th.flat_contact = flat;
  return th;
}

std::vector<PersuasionThresholds> persuasion_thresholds_batch(
    std::span<const MemberSpec> members, int grid_n) {
  std::vector<PersuasionThresholds> out(members.size());
  parallel_for_grain(static_cast<std::int64_t>(members.size()), 1,
                     [&](std::int64_t i) {
                       out[i] = persuasion_thresholds(members[i], grid_n);
                     });
  return out;
}

BeliefDistribution optimal_signal(const GridFunction& value, Belief prior) {
  if (!(prior > 0.0 && prior < 1.0)) {
    throw ParameterOutOfRange("optimal_signal requires an interior prior");
  }
  const std::vector<int> hull = upper_hull_vertices(value);

  double scale = 1.0;
  for (double v : value.values) scale = std::max(scale, std::abs(v));
  const double tol = 1e-12 * scale;

  // Hull segment containing the prior.
  const double pos = prior * (value.n - 1);
  std::size_t lo = 0, hi = hull.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (static_cast<double>(hull[mid]) <= pos ? lo : hi) = mid;
  }
  const int i = hull[lo];
  const int j = hull[hi];
  const double slope =
      (value.values[j] - value.values[i]) / static_cast<double>(j - i);
  const double envP = value.values[i] + slope * (pos - i);
  const double fP = value.value_at(prior);
  if (envP - fP <= tol) return degenerate(prior);

  auto on_chord = [&](int k) {
    const double lineK = value.values[i] + slope * (k - i);
    return lineK - value.values[k] <= tol;
  };

  // Shrink the hull edge to the contact points nearest the prior: this is the
  // smallest optimal high atom and the largest optimal low atom.
  int kLow = static_cast<int>(pos);
  int kHigh = kLow + 1;
  if (value.x(kLow) >= prior) kHigh = kLow;  // prior sits on a grid point
  int b = kHigh;
  while (b < j && !on_chord(b)) ++b;
  int a = std::min(kLow, b - 1);
  while (a > i && !on_chord(a)) --a;

  const double xa = value.x(a);
  const double xb = value.x(b);
  const double wHigh = (prior - xa) / (xb - xa);
  return make_distribution({xa, xb}, {1.0 - wHigh, wHigh});
}

}  // namespace persuade
