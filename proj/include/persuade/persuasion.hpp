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

#ifndef PERSUADE_PERSUASION_HPP_
#define PERSUADE_PERSUASION_HPP_

#include <functional>
#include <span>
#include <vector>

#include "persuade/belief.hpp"
#include "persuade/preferences.hpp"

namespace persuade {

inline constexpr int kDefaultGridN = 10001;
inline constexpr int kMinThresholdGridN = 1001;
inline constexpr double kContactTolerance = 1e-10;
inline constexpr double kRefineTolerance = 1e-12;

// Values of a function on the uniform belief grid 0, h, 2h, ..., 1 with
// h = 1/(n-1), n >= 3.
struct GridFunction {
  int n = 0;
  std::vector<double> values;

  static GridFunction sample(int n, const std::function<double(double)>& f);

  double step() const { return 1.0 / (n - 1); }
  double x(int k) const { return static_cast<double>(k) / (n - 1); }
  // Linear interpolation; r is clamped to [0, 1].
  double value_at(double r) const;
};

// Pointwise-smallest concave function above f: the upper hull of the grid
// point set, computed by a monotone chain in O(n).
GridFunction upper_concave_envelope(const GridFunction& f);

// Indices of the upper-hull vertices of {(x_k, f_k)}; strictly concave
// vertices only (points on a hull edge are dropped).
std::vector<int> upper_hull_vertices(const GridFunction& f);

// Value at p of the upper hull of {(k/(n-1), f(k/(n-1)))}. Streams the hull
// so arbitrarily fine grids need no O(n) storage of values. Used as the
// grid-concavification oracle at resolutions far beyond kDefaultGridN.
template <typename F>
double grid_envelope_value(int n, F&& f, double p);

// Thresholds of persuasion: the endpoints of the belief interval inside
// which a lone decision-maker strictly gains from acquiring information.
// They always bracket the indifference threshold; q_low == q_high means
// information is never acquired and both collapse to the indifference point.
struct PersuasionThresholds {
  double q_low = 0.0;
  double q_high = 0.0;
  // True when the envelope coincides with the objective along a hull edge of
  // positive length (a flat piece), so the optimal stopping posteriors are
  // not everywhere unique. Reported, never resolved.
  bool flat_contact = false;

  bool degenerate() const { return q_low == q_high; }
};

// Contact set of the concave envelope of q -> preferred_payoff(q) - c(q)
// around the indifference kink, located on a grid of at least
// kMinThresholdGridN points and refined by bisection on the tangency
// conditions (to ~1e-9) for kernels with derivatives.
PersuasionThresholds persuasion_thresholds(const MemberSpec& m, int grid_n);

// Batch solve, parallel across members.
std::vector<PersuasionThresholds> persuasion_thresholds_batch(
    std::span<const MemberSpec> members, int grid_n);

// Sender-optimal signal against an arbitrary enactment-value function on the
// grid: a Bayes-plausible distribution with at most two atoms whose expected
// value reaches the concave envelope at the prior. Returns the point mass at
// the prior when the envelope already touches the function there. Among tied
// optima, picks the smallest feasible high atom, then the largest low atom.
BeliefDistribution optimal_signal(const GridFunction& value, Belief prior);

// --- implementation ---

template <typename F>
double grid_envelope_value(int n, F&& f, double p) {
  struct Pt {
    double x, y;
  };
  std::vector<Pt> hull;
  hull.reserve(64);
  const double inv = 1.0 / (n - 1);
  for (int k = 0; k < n; ++k) {
    const Pt next{k * inv, f(k * inv)};
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // Drop b when it lies on or below chord a->next.
      if ((next.x - a.x) * (b.y - a.y) - (b.x - a.x) * (next.y - a.y) <= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(next);
  }
  if (p <= hull.front().x) return hull.front().y;
  if (p >= hull.back().x) return hull.back().y;
  std::size_t lo = 0, hi = hull.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (hull[mid].x <= p ? lo : hi) = mid;
  }
  const double lam = (p - hull[lo].x) / (hull[hi].x - hull[lo].x);
  return hull[lo].y + lam * (hull[hi].y - hull[lo].y);
}

}  // namespace persuade

#endif  // PERSUADE_PERSUASION_HPP_
