#ifndef MPKC_PARALLEL_HPP
#define MPKC_PARALLEL_HPP

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpkc {

// Worker budget: MPKC_THREADS when set, otherwise the OpenMP default.
int worker_budget();

// True while already inside a parallel region; nested loops then run serially.
inline bool in_parallel_region() {
#ifdef _OPENMP
    return omp_in_parallel() != 0;
#else
    return false;
#endif
}

// Data-parallel loop over [0, count). With enable == false (or without OpenMP)
// this is a plain serial loop, bitwise identical in effect: bodies only write
// to their own slots. If bodies throw, the exception of the smallest index is
// rethrown, so failures are schedule-independent too.
template <class Body>
void parallel_for(long long count, bool enable, int workers, Body&& body) {
#ifdef _OPENMP
    if (enable && workers > 1 && count > 1 && !in_parallel_region()) {
        std::exception_ptr error;
        long long error_index = -1;
        std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
        for (long long i = 0; i < count; ++i) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (error_index < 0 || i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#else
    (void)workers;
    (void)enable;
#endif
    for (long long i = 0; i < count; ++i) body(i);
}

} // namespace mpkc

#endif
