#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace operlab {

// Worker cap: OPERLAB_THREADS (default: hardware concurrency). Results are
// written into preallocated slots, so the output is deterministic.
inline int max_threads() {
  if (const char* env = std::getenv("OPERLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

inline void parallel_for(size_t n, const std::function<void(size_t)>& body) {
  int nt = std::min<size_t>(max_threads(), n);
  if (nt <= 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < n; i += nt) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace operlab
