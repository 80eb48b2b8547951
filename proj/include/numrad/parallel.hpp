#pragma once

#include "numrad/sweep.hpp"

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace numrad {

/// Runs body(i) for i in [0, count). Iterations run on the OpenMP team under
/// Execution::Parallel unless the caller is already inside a parallel
/// region. Exceptions are captured per index and the lowest-index one is
/// rethrown, so error reporting does not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, Execution execution, Body&& body) {
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
#ifdef _OPENMP
    const bool parallel = execution == Execution::Parallel && count > 1 && !omp_in_parallel();
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    (void)execution;
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace numrad
