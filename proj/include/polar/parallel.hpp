#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polar {

/// Sets the OpenMP worker count; n <= 0 keeps the runtime default.
inline void set_workers(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

inline int workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// out[i] = f(i) for i in [0, count). Each slot is written by exactly one worker,
/// so callers that reduce `out` in index order get schedule-independent results.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& f) {
    std::vector<T> out(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    return out;
}

}  // namespace polar
