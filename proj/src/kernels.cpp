#include "strata/kernels.hpp"

#include <limits>  // for numeric_limits

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strata::kernels {

  namespace {
    // First failing (j, k) for a fixed left factor i, encoded j * n + k.
    std::size_t first_failure_in_row(std::size_t                    n,
                                     std::span<element_index const> t,
                                     std::size_t                    i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t const ij = t[i * n + j];
        for (std::size_t k = 0; k < n; ++k) {
          if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
            return j * n + k;
          }
        }
      }
      return std::numeric_limits<std::size_t>::max();
    }

    triple decode(std::size_t n, std::size_t i, std::size_t jk) {
      return {static_cast<element_index>(i),
              static_cast<element_index>(jk / n),
              static_cast<element_index>(jk % n)};
    }
  }  // namespace

  std::optional<triple>
  first_nonassociative_triple_serial(std::size_t                    n,
                                     std::span<element_index const> table) {
    for (std::size_t i = 0; i < n; ++i) {
      auto jk = first_failure_in_row(n, table, i);
      if (jk != std::numeric_limits<std::size_t>::max()) {
        return decode(n, i, jk);
      }
    }
    return std::nullopt;
  }

  std::optional<triple>
  first_nonassociative_triple_parallel(std::size_t                    n,
                                       std::span<element_index const> table) {
    // Rows are independent; the least failing row wins, so the answer does
    // not depend on scheduling.
    std::size_t     best_row = std::numeric_limits<std::size_t>::max();
    long long const rows     = static_cast<long long>(n);
#pragma omp parallel reduction(min : best_row)
    {
      std::size_t const                    local_n = n;
      std::span<element_index const> const local_t = table;
#pragma omp for schedule(dynamic, 4)
      for (long long i = 0; i < rows; ++i) {
        if (static_cast<std::size_t>(i) < best_row
            && first_failure_in_row(local_n, local_t, static_cast<std::size_t>(i))
                   != std::numeric_limits<std::size_t>::max()) {
          best_row = static_cast<std::size_t>(i);
        }
      }
    }
    if (best_row == std::numeric_limits<std::size_t>::max()) {
      return std::nullopt;
    }
    return decode(n, best_row, first_failure_in_row(n, table, best_row));
  }

  std::optional<triple>
  first_nonassociative_triple(std::size_t n, std::span<element_index const> table) {
    if (n >= parallel_threshold) {
      return first_nonassociative_triple_parallel(n, table);
    }
    return first_nonassociative_triple_serial(n, table);
  }

}  // namespace strata::kernels
