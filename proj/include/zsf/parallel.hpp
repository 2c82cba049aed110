#ifndef ZSF_PARALLEL_HPP
#define ZSF_PARALLEL_HPP

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace zsf {

// Grid kernels in this library are embarrassingly parallel maps: element i of
// the output depends on input i only. Each slot is written by exactly one
// iteration, so results are bit-identical for any thread count. Reductions
// (quadrature sums) stay serial inside a single work item.

template <class F>
void parallel_for_index(std::size_t n, F&& body) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

template <class F>
void serial_for_index(std::size_t n, F&& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

// out[i] = fn(grid[i]); OpenMP when available.
template <class T, class U, class F>
std::vector<U> parallel_map(const std::vector<T>& grid, F&& fn) {
    std::vector<U> out(grid.size());
    parallel_for_index(grid.size(), [&](std::size_t i) { out[i] = fn(grid[i]); });
    return out;
}

// Serial reference for the same map; used by tests and the benchmark.
template <class T, class U, class F>
std::vector<U> serial_map(const std::vector<T>& grid, F&& fn) {
    std::vector<U> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = fn(grid[i]);
    return out;
}

inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace zsf

#endif
