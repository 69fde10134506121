#pragma once

#include <functional>

namespace pnr {

/// Worker count: PNR_THREADS if set and positive, hardware concurrency
/// otherwise (PNR_THREADS=0 also means auto).
int worker_count();

/// Runs fn(i) for i in [begin, end) across workers in contiguous chunks.
/// fn must only write to slots owned by its index; results are then
/// independent of the schedule.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

} // namespace pnr
