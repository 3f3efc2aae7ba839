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

#include "persuade/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace persuade {
namespace {

std::atomic<int> g_thread_cap{0};

int env_thread_cap() {
  const char* raw = std::getenv("PERSUADE_LAB_THREADS");
  if (raw == nullptr) return 0;
  try {
    const int value = std::stoi(raw);
    return value > 0 ? value : 0;
  } catch (...) {
    return 0;
  }
}

}  // namespace

void set_thread_cap(int cap) { g_thread_cap.store(cap < 0 ? 0 : cap); }

int thread_cap() {
  const int owned = g_thread_cap.load();
  if (owned > 0) return owned;
  const int env = env_thread_cap();
  if (env > 0) return env;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

int resolve_threads(std::int64_t n, std::int64_t min_per_thread) {
  // Tiny loops are not worth a parallel region.
  if (min_per_thread < 1) min_per_thread = 1;
  int threads = thread_cap();
  if (n < 2 * min_per_thread) return 1;
  const std::int64_t bound = n / min_per_thread;
  if (bound < threads) threads = static_cast<int>(bound);
  return threads < 1 ? 1 : threads;
}

}  // namespace detail
}  // namespace persuade
