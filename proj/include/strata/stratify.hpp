// Base, layers, depth and height of a finite semigroup.
//
// Base(S) is the intersection of all the set powers S^m. For a finite
// semigroup the chain S ⊇ S^2 ⊇ ... stabilizes, so Base(S) = S^h where the
// height h is the least m with S^m = S^(m+1). The layers are the differences
// S_m = S^m \ S^(m+1) for 1 <= m < h.

#ifndef STRATA_STRATIFY_HPP_
#define STRATA_STRATIFY_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "core.hpp"         // for Quotient
#include "element_set.hpp"  // for ElementSet, element_index
#include "semigroup.hpp"    // for Semigroup

namespace strata {

  // Layer index of an element, or "in the base".
  class Depth {
   public:
    static Depth base() {
      return Depth(0);
    }

    static Depth layer(std::size_t m) {
      return Depth(m);
    }

    bool in_base() const noexcept {
      return _layer == 0;
    }

    // Only meaningful when !in_base().
    std::size_t layer_index() const noexcept {
      return _layer;
    }

    friend bool operator==(Depth, Depth) = default;

   private:
    explicit Depth(std::size_t layer) : _layer(layer) {}

    std::size_t _layer;
  };

  struct StratificationFlags {
    bool grillet_stratified  = false;
    bool globally_idempotent = false;
    bool base_equals_reg     = false;

    friend bool operator==(StratificationFlags const&, StratificationFlags const&)
        = default;
  };

  struct StratificationReport {
    ElementSet              base;
    std::vector<ElementSet> layers;  // layers[m - 1] = S_m
    std::size_t             height = 0;
    std::vector<Depth>      depth_of;
    StratificationFlags     flags;
    std::vector<std::string> notes;
  };

  StratificationReport stratify(Semigroup const& S);

  Depth depth(Semigroup const& S, element_index s);

  // With a zero: Base(S) = {0}. Without: decided on S^0, which for a finite
  // semigroup is never stratified.
  bool is_grillet_stratified(Semigroup const& S);

  // Least m with S^m = {0}; nullopt when S has no zero or is not nilpotent.
  std::optional<std::size_t> nilpotency_index(Semigroup const& S);

  // Every element has a power in base, checked by chasing powers.
  bool is_nil_stratified(Semigroup const& S, ElementSet const& base);

  struct Classification {
    std::size_t height = 0;
    bool        nil_stratified      = false;
    bool        globally_idempotent = false;
    // S / Base(S), and its nilpotency index (asserted equal to height).
    Quotient    base_quotient;
    std::size_t quotient_nilpotency_index = 0;
  };

  // Throws InternalError if the independent checks disagree with the power
  // chain.
  Classification classify(Semigroup const& S);

}  // namespace strata

#endif  // STRATA_STRATIFY_HPP_
