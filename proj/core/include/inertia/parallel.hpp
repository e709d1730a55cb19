#pragma once

#include <cstddef>
#include <functional>

namespace inertia {

/// Worker count: the INERTIA_LAB_THREADS environment variable caps
/// parallelism, 0 or unset means all hardware threads. Re-read on every call
/// so tests can vary it within one process.
std::size_t thread_budget();

/// Runs body(index) for every index in [0, count). Work is split into
/// contiguous chunks across threads; the body owns all its state, results
/// must be written to per-index slots so that the outcome is identical
/// however many threads run.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace inertia
