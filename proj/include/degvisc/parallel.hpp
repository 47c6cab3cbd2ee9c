#pragma once

#include <cstddef>
#include <vector>

namespace degvisc {

/// Sets the worker count used by all data-parallel kernels (n >= 1).
void set_thread_count(int n);
int thread_count();

/// Calls body(i) for i in [0, n). Iterations must be independent.
template <class Body>
void parallel_for(std::ptrdiff_t n, Body&& body) {
    const int threads = thread_count();
    if (threads == 1) {
        // plain loop: the outlined OpenMP body defeats vectorization of the stencils
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
        return;
    }
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

/// Pairwise sum of x in a fixed association order independent of threads.
double pairwise_sum(const double* x, std::size_t n);

/// Sum of term(i) over [0, n). Terms are evaluated in parallel into fixed
/// blocks whose partial sums are combined pairwise, so the result is the
/// same bit pattern for every thread count.
template <class Term>
double deterministic_sum(std::size_t n, Term&& term) {
    constexpr std::size_t block = 1024;
    const std::size_t nblocks = (n + block - 1) / block;
    std::vector<double> partial(nblocks, 0.0);
    parallel_for(static_cast<std::ptrdiff_t>(nblocks), [&](std::ptrdiff_t b) {
        double buf[block];
        const std::size_t lo = static_cast<std::size_t>(b) * block;
        const std::size_t hi = lo + block < n ? lo + block : n;
        for (std::size_t i = lo; i < hi; ++i) buf[i - lo] = term(i);
        partial[static_cast<std::size_t>(b)] = pairwise_sum(buf, hi - lo);
    });
    return pairwise_sum(partial.data(), nblocks);
}

}  // namespace degvisc
