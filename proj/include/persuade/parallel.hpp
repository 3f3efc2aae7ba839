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

#ifndef PERSUADE_PARALLEL_HPP_
#define PERSUADE_PARALLEL_HPP_

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace persuade {

// Effective worker count. Resolution order: programmatic override from
// set_thread_cap, then the PERSUADE_LAB_THREADS environment variable, then
// the OpenMP default. A cap of 0 means "auto".
int thread_cap();
void set_thread_cap(int cap);

namespace detail {
int resolve_threads(std::int64_t n, std::int64_t min_per_thread);
}

// Runs body(i) for i in [0, n). Iterations must be independent; any shared
// output must be written to disjoint slots so results do not depend on the
// schedule. Falls back to a plain loop when OpenMP is unavailable or the
// cap resolves to one thread. `min_per_thread` is the smallest slice worth a
// worker; pass 1 when each iteration is itself heavy.
template <typename F>
void parallel_for_grain(std::int64_t n, std::int64_t min_per_thread, F&& body) {
#ifdef _OPENMP
  const int threads = detail::resolve_threads(n, min_per_thread);
  if (threads > 1) {
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    body(i);
  }
}

template <typename F>
void parallel_for(std::int64_t n, F&& body) {
  parallel_for_grain(n, 16, static_cast<F&&>(body));
}

}  // namespace persuade

#endif  // PERSUADE_PARALLEL_HPP_
