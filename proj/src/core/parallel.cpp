#include "core/parallel.hpp"

#include <algorithm>

namespace lux {

namespace {
std::atomic<int> g_threads{1};
}

int thread_count() { return g_threads.load(std::memory_order_relaxed); }

void set_thread_count(int n) {
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int cap = hw > 0 ? hw : 1;
  g_threads.store(std::clamp(n, 1, cap), std::memory_order_relaxed);
}

}  // namespace lux
