// Copyright 2026 The qsup Authors
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

#ifndef QSUP_PARALLEL_HPP_
#define QSUP_PARALLEL_HPP_

#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qsup {

/// Runs fn(i) for i in [0, count) across `threads` workers on contiguous
/// index blocks. Each index is processed exactly once and results must be
/// written to index-addressed slots by the caller, so output is identical for
/// any thread count. The first worker exception is rethrown.
inline void parallel_for(uint64_t count, int threads, const std::function<void(uint64_t)>& fn) {
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (count == 0) return;
  if (threads == 1 || count == 1) {
    for (uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  uint64_t workers = static_cast<uint64_t>(threads) < count ? static_cast<uint64_t>(threads) : count;
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mu;
  uint64_t base = count / workers, extra = count % workers;
  uint64_t start = 0;
  for (uint64_t w = 0; w < workers; ++w) {
    uint64_t len = base + (w < extra ? 1 : 0);
    uint64_t begin = start, end = start + len;
    start = end;
    pool.emplace_back([&, begin, end] {
      try {
        for (uint64_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qsup

#endif  // QSUP_PARALLEL_HPP_
