#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace hmf {

// Runs fn(0..n-1) across the given number of threads in contiguous chunks.
// Each index writes only its own outputs, so results are identical for every
// job count.
inline void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  size_t workers = std::min((size_t)jobs, n);
  std::vector<std::thread> threads;
  size_t chunk = (n + workers - 1) / workers;
  for (size_t w = 0; w < workers; ++w) {
    size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &fn] {
      for (size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace hmf
