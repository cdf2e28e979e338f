#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace cpb {

/// Splits [begin, end) into `workers` contiguous chunks and runs
/// fn(worker_index, chunk_begin, chunk_end), one thread per chunk.
/// Chunk boundaries depend only on (begin, end, workers), and callers
/// combine per-chunk results in worker order — so any computation whose
/// per-index work is deterministic yields identical results for every
/// worker count.
inline void run_partitioned(std::uint64_t begin, std::uint64_t end, unsigned workers,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  workers = std::max(1u, workers);
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (workers == 1 || total == 0) {
    fn(0, begin, end);
    return;
  }
  if (std::uint64_t(workers) > total) workers = static_cast<unsigned>(total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = total / workers, rem = total % workers;
  std::uint64_t lo = begin;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
    pool.emplace_back(fn, w, lo, hi);
    lo = hi;
  }
  for (auto& t : pool) t.join();
}

}  // namespace cpb
