#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace primewave {

// Worker count: hardware concurrency, capped by PRIMEWAVE_THREADS when set.
inline unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PRIMEWAVE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && (unsigned long)v < hw) hw = unsigned(v);
  }
  return hw;
}

// Runs fn(begin, end) over [0,n) in fixed-size chunks. The partition depends
// only on `chunk`, never on the worker count, so per-chunk output slots make
// results reproducible across thread counts. fn must not throw.
template <class Fn>
void parallel_chunks(size_t n, size_t chunk, Fn&& fn) {
  if (n == 0) return;
  if (chunk == 0) chunk = 1;
  size_t nchunks = (n + chunk - 1) / chunk;
  size_t nt = std::min<size_t>(thread_budget(), nchunks);
  if (nt <= 1) {
    for (size_t c = 0; c < nchunks; ++c)
      fn(c * chunk, std::min(n, (c + 1) * chunk));
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      fn(c * chunk, std::min(n, (c + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nt - 1);
  for (size_t i = 0; i + 1 < nt; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace primewave
