// Copyright 2026 The equicolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace equicolor::detail {

/// Requested worker count; 0 means EQUICOLOR_THREADS or, failing that, the
/// hardware concurrency. EQUICOLOR_THREADS also caps explicit requests.
inline int resolve_threads(int requested) {
  int cap = 0;
  if (const char* env = std::getenv("EQUICOLOR_THREADS")) cap = std::atoi(env);
  int threads = requested > 0 ? requested : cap > 0 ? cap : static_cast<int>(std::thread::hardware_concurrency());
  if (cap > 0) threads = std::min(threads, cap);
  return std::max(threads, 1);
}

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any body is rethrown on the caller.
template <class F>
void parallel_for(int count, int threads, F&& body) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (int i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace equicolor::detail
