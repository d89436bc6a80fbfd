#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace degseq {

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline int resolve_threads(int requested) {
    return requested > 0 ? requested : hardware_threads();
}

// Deterministic parallel map: fn(i) for i in [0, count), results returned in
// index order regardless of scheduling, so output is identical for any
// thread count.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, int threads, Fn&& fn) {
    std::vector<R> slots(count);
    threads = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long i = 0; i < static_cast<long long>(count); ++i)
        slots[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return slots;
}

// Serial reference implementation, kept for tests and the benchmark.
template <typename R, typename Fn>
std::vector<R> serial_map(std::size_t count, Fn&& fn) {
    std::vector<R> slots;
    slots.reserve(count);
    for (std::size_t i = 0; i < count; ++i) slots.push_back(fn(i));
    return slots;
}

}  // namespace degseq
