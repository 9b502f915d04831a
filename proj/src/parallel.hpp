#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace alphaspec::detail {

/// Splits [0, total) into fixed-size chunks, evaluates fn(begin, end) on up to
/// `workers` threads at a time and returns the per-chunk results in chunk
/// order. Chunk boundaries do not depend on the worker count, so merged output
/// is identical for any number of threads.
template <typename Result, typename Fn>
std::vector<Result> chunked_map(std::uint64_t total, std::uint64_t chunk, unsigned workers, Fn&& fn,
                                const std::function<void(std::uint64_t, std::uint64_t)>& progress = {}) {
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<Result> results(chunks);
  workers = std::max(1u, workers);
  for (std::uint64_t first = 0; first < chunks; first += workers) {
    const std::uint64_t last = std::min<std::uint64_t>(chunks, first + workers);
    std::vector<std::exception_ptr> errors(last - first);
    auto run = [&](std::uint64_t c) {
      try {
        results[c] = fn(c * chunk, std::min(total, (c + 1) * chunk));
      } catch (...) {
        errors[c - first] = std::current_exception();
      }
    };
    if (last - first == 1) {
      run(first);
    } else {
      std::vector<std::jthread> pool;
      for (std::uint64_t c = first; c < last; ++c) pool.emplace_back(run, c);
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    if (progress) progress(std::min(total, last * chunk), total);
  }
  return results;
}

}  // namespace alphaspec::detail
