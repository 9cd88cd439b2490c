#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cudtaus {

/// Worker count from CUD_THREADS, falling back to hardware parallelism.
inline int default_threads() {
  if (const char* env = std::getenv("CUD_THREADS"); env != nullptr && *env != '\0') {
    try {
      const int n = std::stoi(env);
      if (n > 0) {
        return n;
      }
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

/// Calls fn(begin, end) on contiguous blocks of [0, n) using up to `threads`
/// workers. Block boundaries depend only on n and the worker count; the first
/// exception thrown by any worker is rethrown.
template <typename Fn>
void parallel_blocks(std::size_t n, int threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    if (n > 0) {
      fn(std::size_t{0}, n);
    }
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t k = 0; k < workers; ++k) {
    const std::size_t begin = n * k / workers;
    const std::size_t end = n * (k + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) {
    std::rethrow_exception(error);
  }
}

/// Calls fn(i) for every i in [0, n).
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  parallel_blocks(n, threads, [&fn](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      fn(i);
    }
  });
}

}  // namespace cudtaus
