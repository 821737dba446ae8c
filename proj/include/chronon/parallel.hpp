#ifndef CHRONON_PARALLEL_HPP
#define CHRONON_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chronon::par {

/// Thread budget: CHRONON_THREADS caps the OpenMP default when set.
inline int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("CHRONON_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

/// Data-parallel loop over [0, n). Each index must be independent; results
/// keyed by index are identical to the serial loop regardless of schedule.
template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
    const int threads = max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        f(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) f(i);
#endif
}

/// Serial reference loop, kept for testing the parallel kernels against.
template <class F>
void serial_for(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

} // namespace chronon::par

#endif
