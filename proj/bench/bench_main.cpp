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

// Benchmark comparing the OpenMP kernels against their serial references:
//   - the equilibrium strategy-verification kernel (sampled deviations over an
//     interim-belief grid),
//   - the batch persuasion-threshold solver,
//   - fine-grid enactment-envelope evaluation.
// Usage: persuade_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "persuade/dictatorship.hpp"
#include "persuade/equilibrium_lab.hpp"
#include "persuade/parallel.hpp"
#include "persuade/persuasion.hpp"
#include "persuade/random.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename F>
double time_best_of(int repeats, F&& fn) {
  double best = 1e100;
  for (int i = 0; i < repeats; ++i) {
    const auto start = Clock::now();
    fn();
    const double t = seconds_since(start);
    if (t < best) best = t;
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-34s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3,
              parallel * 1e3, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace persuade;
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;

  std::printf("threads available: %d\n", thread_cap());
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  // Strategy verification on a three-member committee over the full catalog.
  SplitMix64 rng(2026);
  std::vector<MemberSpec> members;
  for (int i = 0; i < 3; ++i) {
    members.push_back(make_member(rng.uniform(0.2, 1.5),
                                  CostKernel::quadratic(rng.uniform(0.3, 2.0))));
  }
  const Committee committee = make_committee(members, 0.35);
  const auto catalog = full_catalog(3);
  EquilibriumCheckOptions opts;
  opts.grid_n = 2001;
  opts.samples = 400;

  const double checkSerial = time_best_of(repeats, [&] {
    for (const auto& mech : catalog) {
      (void)verify_equilibrium_strategies_serial(committee, mech, opts);
    }
  });
  const double checkParallel = time_best_of(repeats, [&] {
    for (const auto& mech : catalog) {
      (void)verify_equilibrium_strategies(committee, mech, opts);
    }
  });
  report("equilibrium checks (catalog)", checkSerial, checkParallel);

  // Threshold batch across many members.
  std::vector<MemberSpec> batch;
  for (int i = 0; i < 256; ++i) {
    batch.push_back(make_member(rng.uniform(0.0, 2.0),
                                CostKernel::quadratic(rng.uniform(0.1, 3.0))));
  }
  const double thSerial = time_best_of(repeats, [&] {
    for (const MemberSpec& m : batch) {
      (void)persuasion_thresholds(m, kDefaultGridN);
    }
  });
  const double thParallel = time_best_of(repeats, [&] {
    (void)persuasion_thresholds_batch(batch, kDefaultGridN);
  });
  report("persuasion thresholds (batch 256)", thSerial, thParallel);

  // Fine-grid envelope evaluation of dictatorship enactment functions.
  const int fineN = 2'000'001;
  std::vector<PersuasionThresholds> ths;
  for (int i = 0; i < 16; ++i) {
    ths.push_back(persuasion_thresholds(batch[i], kDefaultGridN));
  }
  std::vector<double> serialOut(ths.size()), parallelOut(ths.size());
  const double envSerial = time_best_of(repeats, [&] {
    for (std::size_t i = 0; i < ths.size(); ++i) {
      const double t = 1.0 / (1.0 + batch[i].u);
      serialOut[i] = grid_envelope_value(
          fineN, [&](double r) { return zeta_value(ths[i], t, r); }, 0.4);
    }
  });
  const double envParallel = time_best_of(repeats, [&] {
    parallel_for_grain(static_cast<std::int64_t>(ths.size()), 1, [&](std::int64_t i) {
      const double t = 1.0 / (1.0 + batch[i].u);
      parallelOut[i] = grid_envelope_value(
          fineN, [&](double r) { return zeta_value(ths[i], t, r); }, 0.4);
    });
  });
  report("fine-grid envelope (16 x 2e6)", envSerial, envParallel);

  for (std::size_t i = 0; i < ths.size(); ++i) {
    if (serialOut[i] != parallelOut[i]) {
      std::printf("MISMATCH in envelope outputs at %zu\n", i);
      return 1;
    }
  }
  return 0;
}
