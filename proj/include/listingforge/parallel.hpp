#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lf {

// Worker count for a batch kernel: `requested` if >= 1, otherwise the OpenMP
// default. Callers pass 1 to force the serial reference path.
inline int effective_threads(int requested) {
#ifdef _OPENMP
  return requested >= 1 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

// Data-parallel loop over [0, n). threads == 1 runs the plain serial loop;
// otherwise an OpenMP team of `threads` workers. `fn` must be safe to run
// concurrently for distinct indices and must not throw across the parallel
// region boundary.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
#ifdef _OPENMP
  if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < (long long)n; ++i) {
      fn(std::size_t(i));
    }
    return;
  }
#endif
  (void)threads;
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace lf
