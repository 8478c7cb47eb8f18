#pragma once

#include <cstddef>
#include <functional>

namespace ispec {

/// Worker count: INTERVAL_SPECTRA_THREADS if set (values < 1 mean 1),
/// otherwise the hardware concurrency.
unsigned thread_cap();

/// Runs f(task) for task = 0..count-1 on up to thread_cap() workers (tasks
/// are assigned by an atomic counter). Tasks must be independent; each should
/// write only to its own result slot so results do not depend on scheduling.
void parallel_tasks(std::size_t count, const std::function<void(std::size_t)>& f);

} // namespace ispec
