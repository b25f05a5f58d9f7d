#pragma once

// Data-parallel sweep helper: a serial reference path and an OpenMP path
// over the same body. Results must be written to preallocated slots so the
// output is identical regardless of path or thread count.

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace keyl {

inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// threads <= 1 (or no OpenMP) runs the serial reference loop.
template <typename Body>
void parallel_for(std::size_t count, int threads, const Body& body) {
#if defined(_OPENMP)
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

} // namespace keyl
