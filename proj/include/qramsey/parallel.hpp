// Copyright 2026 The qramsey Authors
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
#include <future>
#include <vector>

namespace qramsey::detail {

/**
 * Evaluates fn(0), fn(1), ... in batches of `workers` and stops after the
 * first batch containing an accepted result. Returns every evaluated result
 * in index order, so the lowest accepted index is the same for any worker
 * count.
 */
template <class Fn, class Accept>
auto run_until_accepted(int count, int workers, Fn fn, Accept accept) {
  using Result = decltype(fn(0));
  std::vector<Result> results;
  results.reserve(static_cast<std::size_t>(std::max(count, 0)));
  workers = std::max(workers, 1);
  for (int start = 0; start < count; start += workers) {
    const int stop = std::min(count, start + workers);
    if (workers == 1) {
      results.push_back(fn(start));
    } else {
      std::vector<std::future<Result>> batch;
      for (int i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, fn, i));
      for (auto& f : batch) results.push_back(f.get());
    }
    for (int i = start; i < stop; ++i) {
      if (accept(results[static_cast<std::size_t>(i)])) return results;
    }
  }
  return results;
}

}  // namespace qramsey::detail
