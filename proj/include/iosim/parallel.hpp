#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

// Deterministic fork/join helper. Work items are indexed; each index writes
// only its own output slot, so the result does not depend on scheduling.

namespace iosim {

// 0 = auto (hardware concurrency). Set by the CLI from --threads or the
// IOS_SIM_THREADS environment variable.
int thread_count();
void set_thread_count(int n);

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t hw = static_cast<std::size_t>(
      thread_count() > 0 ? thread_count()
                         : std::max(1u, std::thread::hardware_concurrency()));
  const std::size_t workers = std::min(hw, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

} // namespace iosim
