#include "strata/element_set.hpp"

namespace strata {

  ElementSet::ElementSet(std::size_t                          universe,
                         std::initializer_list<element_index> xs)
      : _bits(universe) {
    for (auto x : xs) {
      _bits.set(x);
    }
  }

  ElementSet::ElementSet(std::size_t                       universe,
                         std::vector<element_index> const& xs)
      : _bits(universe) {
    for (auto x : xs) {
      _bits.set(x);
    }
  }

  std::vector<element_index> ElementSet::to_vector() const {
    return std::vector<element_index>(begin(), end());
  }

  std::string ElementSet::to_string() const {
    std::string out = "{";
    bool        sep = false;
    for (auto x : *this) {
      if (sep) {
        out += ", ";
      }
      out += std::to_string(x);
      sep = true;
    }
    return out + "}";
  }

}  // namespace strata
