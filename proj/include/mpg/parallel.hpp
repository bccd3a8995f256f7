#pragma once

#include <cstddef>
#include <functional>

namespace mpg {

/// Worker count from MPG_JOBS if set, else the hardware concurrency.
int default_jobs();

/// Runs body(i) for i in [0, n) on up to `jobs` threads (0 = default_jobs()).
/// The first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace mpg
