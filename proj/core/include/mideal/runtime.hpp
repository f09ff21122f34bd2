#ifndef MIDEAL_RUNTIME_HPP
#define MIDEAL_RUNTIME_HPP

#include <cstddef>
#include <functional>

namespace mideal {

/// Upper bound on worker threads used by bulk maps (box scans, per-degree
/// homology). Default 1 = serial. Results are merged deterministically, so
/// output is identical for every thread count.
void set_worker_threads(int n);
int worker_threads();

/// Runs fn(i) for i in [0, count). Splits into contiguous chunks across at
/// most worker_threads() threads; fn must only write to per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace mideal

#endif
