#pragma once

#include <cstddef>
#include <functional>

namespace femafs {

/// Worker count for a pool over `jobs` items: hardware concurrency, capped by
/// the FEMAFS_THREADS environment variable when set, never more than `jobs`.
std::size_t worker_count(std::size_t jobs);

/// Runs fn(0..n-1) across workers. Each index is processed by exactly one
/// worker and must write only to its own output slot, so results are
/// identical to a sequential loop for any worker count. Nested calls run
/// sequentially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace femafs
