#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ihull {

/// Run fn over [0, total) split into one contiguous chunk per worker.
/// workers <= 1 runs inline. Chunk boundaries depend only on (total,
/// workers), so per-chunk aggregation in chunk order is deterministic.
inline void parallel_for(size_t total, int workers,
                         const std::function<void(size_t, size_t)>& fn) {
  if (total == 0) return;
  if (workers <= 1 || total == 1) {
    fn(0, total);
    return;
  }
  size_t w = std::min<size_t>(workers, total);
  size_t chunk = (total + w - 1) / w;
  std::vector<std::thread> threads;
  for (size_t t = 0; t < w; ++t) {
    size_t b = t * chunk, e = std::min(total, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&, b, e] { fn(b, e); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace ihull
