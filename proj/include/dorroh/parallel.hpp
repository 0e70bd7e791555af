#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dorroh {

/// Indices i with pred(items[i]), in input order. Reference implementation.
template <class T, class Pred>
std::vector<std::size_t> filter_serial(const std::vector<T>& items, Pred pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (pred(items[i])) out.push_back(i);
  return out;
}

/// Same result as filter_serial; the predicate runs across OpenMP threads.
/// Exceptions are caught per item and the first one is rethrown after the loop.
template <class T, class Pred>
std::vector<std::size_t> filter_parallel(const std::vector<T>& items, Pred pred) {
  const long n = static_cast<long>(items.size());
  std::vector<char> keep(items.size(), 0);
  std::vector<std::exception_ptr> errors(items.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      keep[i] = pred(items[i]) ? 1 : 0;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

inline int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace dorroh
