// Copyright 2026 The finring Authors.
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

#ifndef FINRING_PARALLEL_HPP_
#define FINRING_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <span>
#include <thread>
#include <vector>

namespace finring {

// 0 means "all hardware threads".
inline std::size_t resolve_workers(std::size_t requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(begin, end) over contiguous chunks of [0, n). Each index is
// visited by exactly one worker; callers write only to their own slots.
template <class Body>
void parallel_for(std::size_t n, std::size_t workers, Body&& body) {
  workers = std::min(resolve_workers(workers), std::max<std::size_t>(n, 1));
  if (workers <= 1 || n < 2048) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Block size of the reduction tree. Fixed so sums do not depend on the
// worker count.
inline constexpr std::size_t kReductionBlock = 1024;

// Pairwise sum of per-block partials; `block_sum(begin, end)` reduces one
// block sequentially.
template <class T, class BlockSum>
T deterministic_reduce(std::size_t n, std::size_t workers, BlockSum&& block_sum) {
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  if (blocks == 0) return T{};
  std::vector<T> partial(blocks);
  parallel_for(blocks, workers, [&](std::size_t b0, std::size_t b1) {
    for (std::size_t b = b0; b < b1; ++b) {
      partial[b] = block_sum(b * kReductionBlock, std::min(n, (b + 1) * kReductionBlock));
    }
  });
  for (std::size_t width = 1; width < blocks; width *= 2) {
    for (std::size_t i = 0; i + width < blocks; i += 2 * width) partial[i] += partial[i + width];
  }
  return partial[0];
}

}  // namespace finring

#endif  // FINRING_PARALLEL_HPP_
