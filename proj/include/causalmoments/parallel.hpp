#ifndef CAUSALMOMENTS_PARALLEL_HPP
#define CAUSALMOMENTS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace causalmoments {

// Worker cap: CAUSAL_MOMENTS_THREADS when set (>= 1), otherwise the hardware
// concurrency.
int worker_count();

// Runs fn(index) for every index in [0, count). Work items must be
// independent; each writes only its own output slot, so results do not
// depend on the number of workers.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace causalmoments

#endif
