#pragma once

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latcut::detail {

// OpenMP loop with deterministic slot-based collection: f(i) writes only to
// its own slot. Exceptions are captured and rethrown after the join.
template <typename F>
void parallel_for(long n, F&& f) {
  std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace latcut::detail
