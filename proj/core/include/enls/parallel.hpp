#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace enls {

/// Number of worker threads used by block reductions. 0 selects hardware_concurrency.
void set_worker_threads(unsigned count);
unsigned worker_threads();

/// Runs body(block) for block in [0, num_blocks) across the worker pool.
/// Results depend only on the block decomposition, never on the thread count,
/// so callers that reduce per-block partials in block order are bitwise reproducible.
void for_each_block(std::size_t num_blocks, const std::function<void(std::size_t)>& body);

}  // namespace enls
