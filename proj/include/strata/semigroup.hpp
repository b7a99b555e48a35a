// Semigroup: a finite semigroup given by its Cayley table.
//
// table(i, j) is the product i * j with i the left factor. Every Semigroup
// has passed the full O(n^3) associativity check; there is no unchecked
// constructor. The zero and identity elements, when they exist, are detected
// at construction.

#ifndef STRATA_SEMIGROUP_HPP_
#define STRATA_SEMIGROUP_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "element_set.hpp"  // for element_index

namespace strata {

  class Semigroup {
   public:
    // rows[i][j] = i * j. Throws Error with kind empty_table, non_square,
    // index_out_of_range (witness {i, j}), non_associative (witness {i, j, k},
    // the lexicographically first failing triple) or bad_labels.
    static Semigroup from_table(std::vector<std::vector<element_index>> const& rows,
                                std::vector<std::string> labels = {});

    // Row-major flat table of length n * n.
    static Semigroup from_flat(std::size_t                n,
                               std::vector<element_index> table,
                               std::vector<std::string>   labels = {});

    std::size_t size() const noexcept {
      return _n;
    }

    element_index operator()(element_index i, element_index j) const {
      return _table[static_cast<std::size_t>(i) * _n + j];
    }

    element_index product(element_index i, element_index j) const {
      return (*this)(i, j);
    }

    std::span<element_index const> row(element_index i) const {
      return {_table.data() + static_cast<std::size_t>(i) * _n, _n};
    }

    std::vector<element_index> const& flat_table() const noexcept {
      return _table;
    }

    std::vector<std::vector<element_index>> rows() const;

    std::optional<element_index> zero() const noexcept {
      return _zero;
    }

    std::optional<element_index> identity() const noexcept {
      return _identity;
    }

    bool has_labels() const noexcept {
      return !_labels.empty();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    // The display label, or the decimal index when unlabelled.
    std::string label(element_index i) const;

    // s^k for k >= 1.
    element_index power(element_index s, std::size_t k) const;

    // Equality of Cayley tables; labels are presentation only.
    friend bool operator==(Semigroup const& lhs, Semigroup const& rhs) {
      return lhs._n == rhs._n && lhs._table == rhs._table;
    }

   private:
    Semigroup() = default;

    std::size_t                  _n = 0;
    std::vector<element_index>   _table;
    std::vector<std::string>     _labels;
    std::optional<element_index> _zero;
    std::optional<element_index> _identity;
  };

}  // namespace strata

#endif  // STRATA_SEMIGROUP_HPP_
