#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace topedge {

// Thread count: explicit request if positive, else TOPEDGE_THREADS, else hardware concurrency.
int resolve_threads(int requested);

// Calls fn(i) for i in [0, count) over contiguous chunks; fn must only write to slot i.
template <class F>
void parallel_for(std::size_t count, int threads, F&& fn) {
  std::size_t workers = static_cast<std::size_t>(std::max(1, threads));
  workers = std::min(workers, std::max<std::size_t>(1, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace topedge
