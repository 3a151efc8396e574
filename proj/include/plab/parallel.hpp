#ifndef PLAB_PARALLEL_HPP
#define PLAB_PARALLEL_HPP

#include <functional>

namespace plab {

// Worker count for multi-trial sweeps: hardware concurrency, capped by the
// PERCEPTRON_LAB_THREADS environment variable when set (>= 1).
int worker_count();

// Runs fn(0), ..., fn(n-1) on up to worker_count() threads. Iterations must
// be independent and write only to their own output slot; results are then
// identical for any worker count. Exceptions propagate to the caller.
void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace plab

#endif  // PLAB_PARALLEL_HPP
