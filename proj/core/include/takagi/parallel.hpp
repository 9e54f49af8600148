#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace takagi {

/// Worker count for grid scans: TAKAGI_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
unsigned scan_threads();

/// Splits [0, count) into contiguous chunks, runs fn(begin, end) on each and
/// returns the per-chunk results in range order, so any associative merge
/// over them is deterministic.
template <class Fn>
auto map_chunks(std::size_t count, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}, std::size_t{}));
  constexpr std::size_t kMinChunk = 4096;
  std::size_t workers = scan_threads();
  if (count < 2 * kMinChunk) workers = 1;
  workers = std::min<std::size_t>(workers, (count + kMinChunk - 1) / kMinChunk);
  if (workers <= 1) return {fn(std::size_t{0}, count)};

  std::vector<Result> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      pool.emplace_back([&results, &errors, &fn, w, begin, end] {
        try {
          results[w] = fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace takagi
