#pragma once

#include <cstddef>
#include <functional>

namespace latticemill {

// Number of workers for corpus-style loops: min(hardware, LATTICEMILL_THREADS
// when set). Always >= 1.
int worker_count();

// Runs fn(i) for i in [0, count) across workers. Tasks are indexed, so
// callers store results by slot and the merged output is order-independent
// of scheduling. Exceptions from tasks are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace latticemill
