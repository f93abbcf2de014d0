// Copyright 2026 The abcontrast authors
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

#ifndef ABCONTRAST_PARALLEL_HPP
#define ABCONTRAST_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace abcontrast {

/// Thread count used when a caller passes 0: the ABCONTRAST_THREADS
/// environment variable if set, otherwise the hardware concurrency.
unsigned default_thread_count();

namespace detail {
void parallel_for_impl(std::size_t n,
                       const std::function<void(std::size_t)>& body,
                       unsigned threads);
}

/// Runs body(i) for i in [0, n). Work items must be independent; each item
/// writes only to its own index of any shared output, so the result is
/// identical for every thread count. threads == 0 selects the default count;
/// threads == 1 runs inline. The first exception thrown by a work item is
/// rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, unsigned threads = 0) {
  if (threads == 0) threads = default_thread_count();
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  detail::parallel_for_impl(n, std::function<void(std::size_t)>(body), threads);
}

}  // namespace abcontrast

#endif  // ABCONTRAST_PARALLEL_HPP
