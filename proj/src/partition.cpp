#include "strata/partition.hpp"

#include <unordered_map>  // for unordered_map

#include "strata/error.hpp"  // for Error

namespace strata {

  Partition Partition::from_labels(std::vector<std::size_t> const& labels) {
    Partition                                    result;
    std::unordered_map<std::size_t, std::size_t> renumber;
    result._class_of.resize(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, fresh] = renumber.emplace(labels[x], renumber.size());
      if (fresh) {
        result._classes.emplace_back();
      }
      result._class_of[x] = it->second;
      result._classes[it->second].push_back(static_cast<element_index>(x));
    }
    return result;
  }

  Partition Partition::from_classes(std::size_t                    n,
                                    std::vector<ElementSet> const& classes) {
    std::vector<std::size_t> labels(n, static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (classes[k].empty()) {
        throw Error(ErrorKind::invalid_parameter, "empty class in partition");
      }
      for (auto x : classes[k]) {
        if (x >= n || labels[x] != static_cast<std::size_t>(-1)) {
          throw Error(ErrorKind::invalid_parameter,
                      "classes overlap or exceed the universe",
                      {static_cast<std::size_t>(x)});
        }
        labels[x] = k;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (labels[x] == static_cast<std::size_t>(-1)) {
        throw Error(ErrorKind::invalid_parameter,
                    "classes do not cover element " + std::to_string(x), {x});
      }
    }
    return from_labels(labels);
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = x;
    }
    return from_labels(labels);
  }

  Partition Partition::universal(std::size_t n) {
    return from_labels(std::vector<std::size_t>(n, 0));
  }

  ElementSet Partition::class_set(std::size_t k) const {
    return ElementSet(universe_size(), _classes[k]);
  }

  bool Partition::refines(Partition const& that) const {
    for (auto const& cls : _classes) {
      for (auto x : cls) {
        if (that._class_of[x] != that._class_of[cls.front()]) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace strata
