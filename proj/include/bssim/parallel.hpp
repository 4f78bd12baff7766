// Copyright 2026 The bs-sim authors
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

#ifndef BSSIM_PARALLEL_HPP
#define BSSIM_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bssim {

/// Evaluate fn(i) for i in [0, count) and sum the results in index order.
/// Work items are handed to threads dynamically, but each item's value is
/// stored by index and the reduction order is fixed, so the result does not
/// depend on the worker count.
template <typename Fn>
double parallel_indexed_sum(std::size_t count, Fn&& fn) {
  if (count == 0) return 0.0;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<double> partials(count, 0.0);
  if (hw == 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) partials[i] = fn(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          partials[i] = fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const unsigned workers = std::min<std::size_t>(hw, count);
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
  }
  double acc = 0.0;
  for (double v : partials) acc += v;
  return acc;
}

}  // namespace bssim

#endif  // BSSIM_PARALLEL_HPP
