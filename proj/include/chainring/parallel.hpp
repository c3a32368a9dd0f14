#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace chainring {

/// Worker count: CHAINRING_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
unsigned thread_count();

/// out[i] = fn(i) for i < n, spread over thread_count() workers. Results
/// land by index, so the output does not depend on scheduling. The first
/// exception (by index) is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errs(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  unsigned k = std::min<std::size_t>(thread_count(), n);
  if (k <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(work);
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace chainring
