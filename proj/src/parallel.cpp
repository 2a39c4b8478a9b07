#include "iosim/parallel.hpp"

namespace iosim {

namespace {
std::atomic<int> g_threads{0};
}

int thread_count() { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(int n) {
  g_threads.store(n < 0 ? 0 : n, std::memory_order_relaxed);
}

} // namespace iosim
