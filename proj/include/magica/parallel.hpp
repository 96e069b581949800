#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace magica::par {

/// Worker count used by parallel_for; 0 means the OpenMP default.
void set_max_threads(int n);
int max_threads();

template <class F>
void serial_for(std::size_t n, F&& f) {
  for (std::size_t i = 0; i < n; ++i) f(i);
}

/// Data-parallel loop over independent work items. Results must be
/// written to per-index slots so the outcome never depends on the
/// schedule.
template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
  int threads = max_threads();
  if (n > 1 && (threads == 0 || threads > 1)) {
    auto sn = static_cast<long long>(n);
    if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
      for (long long i = 0; i < sn; ++i) f(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(dynamic)
      for (long long i = 0; i < sn; ++i) f(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  serial_for(n, f);
}

}  // namespace magica::par
