#pragma once

// Data-parallel loops used by the sampling searches, the chamber enumeration
// and catalog runs. Every kernel produces the same result for any thread
// count: work items are independent and results are gathered by index.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tempered {

struct Parallelism {
  int jobs = 1;
  bool parallel() const {
#ifdef _OPENMP
    return jobs > 1 && !omp_in_parallel();
#else
    return false;
#endif
  }
};

/// Calls body(i) for i in [0, n). Runs under OpenMP when par.parallel();
/// an exception from the lowest failing index is rethrown after the loop.
template <class Body>
void parallel_for(std::size_t n, Parallelism par, Body&& body) {
  if (par.parallel()) {
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(par.jobs)
    for (long long i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

/// Smallest i in [0, n) with pred(i) true. The parallel path evaluates in
/// blocks of `jobs` items so that a late success never wins over an earlier one.
template <class Pred>
std::optional<std::size_t> first_success(std::size_t n, Parallelism par, Pred&& pred) {
  if (!par.parallel()) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  const auto block = static_cast<std::size_t>(par.jobs);
  for (std::size_t start = 0; start < n; start += block) {
    const std::size_t len = std::min(block, n - start);
    std::vector<char> hit(len, 0);
    parallel_for(len, par, [&](std::size_t k) { hit[k] = pred(start + k) ? 1 : 0; });
    for (std::size_t k = 0; k < len; ++k)
      if (hit[k]) return start + k;
  }
  return std::nullopt;
}

}  // namespace tempered
