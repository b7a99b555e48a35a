// Data-parallel kernels with their serial reference implementations.
//
// Each *_parallel function must return exactly what its *_serial twin
// returns; the serial versions are kept for testing and benchmarking.

#ifndef STRATA_KERNELS_HPP_
#define STRATA_KERNELS_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span

#include "element_set.hpp"  // for element_index

namespace strata::kernels {

  using triple = std::array<element_index, 3>;

  // The lexicographically least (i, j, k) with (ij)k != i(jk), if any.
  // Entries of table must already lie in [0, n).
  std::optional<triple>
  first_nonassociative_triple_serial(std::size_t                    n,
                                     std::span<element_index const> table);

  std::optional<triple>
  first_nonassociative_triple_parallel(std::size_t                    n,
                                       std::span<element_index const> table);

  // Dispatches to the parallel kernel once n is large enough to pay for the
  // thread team.
  std::optional<triple>
  first_nonassociative_triple(std::size_t n, std::span<element_index const> table);

  inline constexpr std::size_t parallel_threshold = 64;

}  // namespace strata::kernels

#endif  // STRATA_KERNELS_HPP_
