#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace satnum {

/// Worker count: SATNUM_THREADS if set and positive, else hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("SATNUM_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(i) for i in [0, count) on up to thread_count() threads. Indices
/// are handed out in increasing order from a shared counter. body must be
/// safe to call concurrently; exceptions escape from the lowest failing index.
template <class Body>
void parallel_for(std::size_t count, Body&& body, int threads = thread_count()) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  const auto width = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  for (std::size_t t = 0; t + 1 < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace satnum
