#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gbei {

/// Worker count to use for a requested value; non-positive means all cores.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Runs body(begin, end, worker) over [0, count) in chunks handed out
/// dynamically to `threads` workers. Exceptions from a worker are rethrown
/// on the calling thread after all workers join.
template <typename Body>
void parallel_for(std::size_t count, int threads, std::size_t chunk,
                  Body&& body) {
  const std::size_t chunks = std::max<std::size_t>(1, (count + chunk - 1) / chunk);
  const int workers = static_cast<int>(
      std::min<std::size_t>(resolve_threads(threads), chunks));
  if (workers <= 1) {
    if (count > 0) body(std::size_t{0}, count, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        while (true) {
          const std::size_t begin = next.fetch_add(chunk);
          if (begin >= count) break;
          body(begin, std::min(count, begin + chunk), w);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace gbei
