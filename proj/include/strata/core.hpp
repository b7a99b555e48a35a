// Set algebra, ideals, quotients, products and congruences over a Semigroup.
//
// Everything here is a pure function of its arguments.

#ifndef STRATA_CORE_HPP_
#define STRATA_CORE_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "element_set.hpp"  // for ElementSet, element_index
#include "partition.hpp"    // for Partition
#include "semigroup.hpp"    // for Semigroup

namespace strata {

  ////////////////////////////////////////////////////////////////////////
  // Set products and powers
  ////////////////////////////////////////////////////////////////////////

  // { a * b : a in A, b in B }
  ElementSet product_set(Semigroup const& S, ElementSet const& A,
                         ElementSet const& B);

  // The descending chain S = S^1 ⊇ S^2 ⊇ ... computed once, up to the first
  // m with S^m = S^(m+1). power(m) answers every m >= 1 from the cache.
  class PowerChain {
   public:
    explicit PowerChain(Semigroup const& S);

    // S^m for m >= 1.
    ElementSet const& power(std::size_t m) const;

    // Least m with S^m = S^(m+1).
    std::size_t stable_index() const noexcept {
      return _powers.size();
    }

    ElementSet const& stable_set() const noexcept {
      return _powers.back();
    }

    // S^1, ..., S^stable_index().
    std::vector<ElementSet> const& powers() const noexcept {
      return _powers;
    }

   private:
    std::vector<ElementSet> _powers;
  };

  // S^m by iterated product_set; S^1 = S. Throws invalid_parameter if m == 0.
  ElementSet power_set(Semigroup const& S, std::size_t m);

  // Smallest subsemigroup containing gens. Throws empty_generators.
  ElementSet closure(Semigroup const& S, ElementSet const& gens);

  bool is_subsemigroup(Semigroup const& S, ElementSet const& A);

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  // S^1 A ⊆ A. The empty set is never an ideal.
  bool is_left_ideal(Semigroup const& S, ElementSet const& A);

  // A S^1 ⊆ A.
  bool is_right_ideal(Semigroup const& S, ElementSet const& A);

  bool is_ideal(Semigroup const& S, ElementSet const& A);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  // A Semigroup together with the map from the elements of its parent.
  struct Quotient {
    Semigroup                  semigroup;
    std::vector<element_index> map;  // parent element -> quotient element
  };

  // S / I with the elements of S \ I first, in their order, and the collapsed
  // zero last. Throws not_an_ideal.
  Quotient rees_quotient(Semigroup const& S, ElementSet const& I);

  // Element (i, j) has index i * |T| + j.
  Semigroup direct_product(Semigroup const& S, Semigroup const& T);

  struct Subsemigroup {
    Semigroup                  semigroup;
    std::vector<element_index> embedding;  // subsemigroup element -> S element
  };

  // A as a semigroup in its own right, elements in increasing order.
  // Throws not_a_subsemigroup.
  Subsemigroup subsemigroup(Semigroup const& S, ElementSet const& A);

  bool is_globally_idempotent(Semigroup const& S);

  // S^0: a fresh absorbing element with index |S|.
  Semigroup adjoin_zero(Semigroup const& S);

  // A fresh identity with index |S|, whether or not S already has one.
  Semigroup adjoin_identity(Semigroup const& S);

  // S^1 in the usual sense: S itself when it already has an identity,
  // adjoin_identity(S) otherwise.
  Semigroup monoid_closure(Semigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  // A witness {a, b, x} with a ~ b but not (ax ~ bx and xa ~ xb).
  std::optional<std::array<element_index, 3>>
  congruence_violation(Semigroup const& S, Partition const& p);

  bool is_congruence(Semigroup const& S, Partition const& p);

  inline constexpr std::size_t default_congruence_cap = 6;

  // All congruences of S, in restricted-growth-string order. Throws
  // order_too_large when |S| > cap.
  std::vector<Partition>
  enumerate_congruences(Semigroup const& S,
                        std::size_t      cap = default_congruence_cap);

  // S / p on class indices. Throws not_a_congruence with witness {a, b, x}.
  Quotient quotient_by_congruence(Semigroup const& S, Partition const& p);

  // { map[a] : a in A } as a subset of a universe of the given size.
  ElementSet image(std::vector<element_index> const& map, ElementSet const& A,
                   std::size_t universe);

  ////////////////////////////////////////////////////////////////////////
  // Actions and reductivity
  ////////////////////////////////////////////////////////////////////////

  // a != b and ax = bx, xa = xb for all x.
  bool interchangeable(Semigroup const& S, element_index a, element_index b);

  // The lexicographically least interchangeable pair, if any.
  std::optional<std::pair<element_index, element_index>>
  interchangeable_pair(Semigroup const& S);

  bool is_weakly_reductive(Semigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Table properties
  ////////////////////////////////////////////////////////////////////////

  bool is_commutative(Semigroup const& S);

  // Every element idempotent.
  bool is_band(Semigroup const& S);

  // Commutative band.
  bool is_semilattice(Semigroup const& S);

  // Has an identity and every element has an inverse with respect to it.
  bool is_group(Semigroup const& S);

  inline constexpr std::size_t default_isomorphism_cap = 12;

  // A bijection f with f(xy) = f(x)f(y), if one exists. Throws
  // order_too_large when the order exceeds cap.
  std::optional<std::vector<element_index>>
  find_isomorphism(Semigroup const& S, Semigroup const& T,
                   std::size_t cap = default_isomorphism_cap);

  inline bool isomorphic(Semigroup const& S, Semigroup const& T) {
    return find_isomorphism(S, T).has_value();
  }

  // The opposite semigroup: x *' y = y * x.
  Semigroup dual(Semigroup const& S);

}  // namespace strata

#endif  // STRATA_CORE_HPP_
