// Partition of the element indices [0, n) into disjoint nonempty classes.
//
// Partitions are kept in canonical form: classes are numbered in order of
// their smallest member, and each class lists its members in increasing
// order. Two partitions of the same set are therefore equal exactly when
// their class_of vectors are equal.

#ifndef STRATA_PARTITION_HPP_
#define STRATA_PARTITION_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "element_set.hpp"  // for ElementSet, element_index

namespace strata {

  class Partition {
   public:
    Partition() = default;

    // labels[x] is any key identifying the class of x; keys are renumbered.
    static Partition from_labels(std::vector<std::size_t> const& labels);

    static Partition from_classes(std::size_t                     n,
                                  std::vector<ElementSet> const& classes);

    static Partition discrete(std::size_t n);

    static Partition universal(std::size_t n);

    std::size_t universe_size() const noexcept {
      return _class_of.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }

    std::size_t class_of(element_index x) const {
      return _class_of[x];
    }

    std::vector<std::size_t> const& class_of() const noexcept {
      return _class_of;
    }

    std::vector<element_index> const& members(std::size_t k) const {
      return _classes[k];
    }

    std::vector<std::vector<element_index>> const& classes() const noexcept {
      return _classes;
    }

    ElementSet class_set(std::size_t k) const;

    bool same_class(element_index x, element_index y) const {
      return _class_of[x] == _class_of[y];
    }

    // Every class of *this is contained in a class of that.
    bool refines(Partition const& that) const;

    friend bool operator==(Partition const& lhs, Partition const& rhs) {
      return lhs._class_of == rhs._class_of;
    }

   private:
    std::vector<std::size_t>                _class_of;
    std::vector<std::vector<element_index>> _classes;
  };

}  // namespace strata

#endif  // STRATA_PARTITION_HPP_
