#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace lux {

int thread_count();
void set_thread_count(int n);

namespace detail {

// Runs fn(chunk_index) for every chunk in [0, n_chunks), spreading chunks over
// the configured worker count. Chunk boundaries are fixed, so which worker
// evaluates a chunk never changes the arithmetic.
template <class Fn>
void for_each_chunk(std::size_t n_chunks, Fn&& fn) {
  const int workers = thread_count();
  if (workers <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      fn(c);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t spawn =
      std::min<std::size_t>(static_cast<std::size_t>(workers), n_chunks);
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Sum of term(j) for j in [0, n). Terms are accumulated serially inside
// fixed-size chunks and the chunk partials are combined in ascending chunk
// order, so the floating-point result is independent of the thread count.
template <class T, class Fn>
T chunked_sum(std::size_t n, Fn&& term) {
  constexpr std::size_t chunk = 4096;
  const std::size_t n_chunks = (n + chunk - 1) / chunk;
  if (n_chunks <= 1) {
    T acc{};
    for (std::size_t j = 0; j < n; ++j) acc += term(j);
    return acc;
  }
  std::vector<T> partial(n_chunks, T{});
  detail::for_each_chunk(n_chunks, [&](std::size_t c) {
    const std::size_t lo = c * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    T acc{};
    for (std::size_t j = lo; j < hi; ++j) acc += term(j);
    partial[c] = acc;
  });
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

}  // namespace lux
