#ifndef ICVP_PARALLEL_HPP
#define ICVP_PARALLEL_HPP

#include <omp.h>

#include <cstdint>
#include <exception>
#include <vector>

#include "icvp/poly.hpp"

namespace icvp {

enum class Execution { serial, parallel };

// Reference reduction: term(0) + term(1) + ... + term(count - 1).
template <class TermFn>
IntPoly reduce_terms_serial(std::size_t count, TermFn&& term) {
  IntPoly sum;
  for (std::size_t i = 0; i < count; ++i) sum += term(i);
  return sum;
}

// OpenMP version of reduce_terms_serial. Each thread accumulates a private
// partial sum; partials are combined in thread order. The arithmetic is
// exact, so the result is bit-identical to the serial one for any schedule.
template <class TermFn>
IntPoly reduce_terms_omp(std::size_t count, TermFn&& term) {
  std::vector<IntPoly> partial(static_cast<std::size_t>(omp_get_max_threads()));
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    IntPoly local;
#pragma omp for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        local += term(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(icvp_reduce_error)
        if (!error) error = std::current_exception();
      }
    }
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  if (error) std::rethrow_exception(error);
  IntPoly sum;
  for (const auto& p : partial) sum += p;
  return sum;
}

// fn(i) for every i < count; fn must only touch state owned by index i.
template <class Fn>
void for_each_index(std::size_t count, Fn&& fn, Execution exec) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(icvp_for_each_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

template <class TermFn>
IntPoly reduce_terms(std::size_t count, TermFn&& term, Execution exec) {
  if (exec == Execution::parallel) return reduce_terms_omp(count, term);
  return reduce_terms_serial(count, term);
}

}  // namespace icvp

#endif  // ICVP_PARALLEL_HPP
