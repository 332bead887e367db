#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace curvelattice {

// Worker count for scan parallelism: CURVELATTICE_THREADS clamped to
// [1, hardware_concurrency], default 1 (scans are deterministic either way;
// results are merged in chunk order).
int thread_budget();

// Split [lo, hi) into contiguous chunks and run fn(chunk_index, chunk_lo,
// chunk_hi) on thread_budget() workers. fn must only touch its own chunk's
// state; the caller merges per-chunk results in index order.
template <typename Fn>
void parallel_chunks(long lo, long hi, int chunks, Fn&& fn) {
  if (hi <= lo || chunks <= 0) return;
  const long n = hi - lo;
  const long step = (n + chunks - 1) / chunks;
  int workers = thread_budget();
  if (workers <= 1 || chunks == 1) {
    for (int c = 0; c < chunks; ++c) {
      long c_lo = lo + c * step;
      if (c_lo >= hi) break;
      fn(c, c_lo, std::min(hi, c_lo + step));
    }
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int c = next.fetch_add(1);
        if (c >= chunks) return;
        long c_lo = lo + c * step;
        if (c_lo >= hi) return;
        fn(c, c_lo, std::min(hi, c_lo + step));
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace curvelattice
