#pragma once

#include <cstddef>

namespace cocycle_forge {

/// Worker cap: COCYCLE_FORGE_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();

}  // namespace cocycle_forge
