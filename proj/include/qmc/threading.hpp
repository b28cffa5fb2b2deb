#pragma once

#include <cstddef>
#include <functional>

namespace qmc {

/// Worker count used for row fan-out: min(jobs, hardware threads), capped
/// by the QMC_THREADS environment variable when set.
std::size_t worker_count(std::size_t jobs);

/// Runs fn over [0, n) split into contiguous [begin, end) chunks, one per
/// worker. fn must be safe to call concurrently on disjoint ranges.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace qmc
