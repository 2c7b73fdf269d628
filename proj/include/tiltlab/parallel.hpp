#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace tiltlab {

// Worker count for parallel sections: TILTLAB_THREADS when set (0 or 1 both
// mean sequential), hardware concurrency otherwise.
inline int worker_count() {
  if (const char* env = std::getenv("TILTLAB_THREADS")) {
    const int parsed = std::atoi(env);
    return parsed <= 1 ? 1 : parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n); results are written by index inside fn, so the
// output is identical whatever the worker count.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tiltlab
