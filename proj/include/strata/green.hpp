// Green's relations, idempotents, weak inverses and the class predicates
// built on them.

#ifndef STRATA_GREEN_HPP_
#define STRATA_GREEN_HPP_

#include <array>     // for array
#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "element_set.hpp"  // for ElementSet, element_index
#include "partition.hpp"    // for Partition
#include "semigroup.hpp"    // for Semigroup

namespace strata {

  // All five Green's relations of one semigroup, computed from the principal
  // ideals sS^1, S^1s and S^1sS^1. The constructor cross-checks
  // R∘L = L∘R and D = J and throws InternalError if either fails.
  class GreenStructure {
   public:
    explicit GreenStructure(Semigroup const& S);

    Partition const& R() const noexcept {
      return _R;
    }
    Partition const& L() const noexcept {
      return _L;
    }
    Partition const& H() const noexcept {
      return _H;
    }
    Partition const& D() const noexcept {
      return _D;
    }
    Partition const& J() const noexcept {
      return _J;
    }

    // sS^1
    ElementSet const& right_ideal(element_index s) const {
      return _right[s];
    }
    // S^1s
    ElementSet const& left_ideal(element_index s) const {
      return _left[s];
    }
    // S^1sS^1
    ElementSet const& ideal(element_index s) const {
      return _ideal[s];
    }

    // J_a <= J_b, i.e. a ∈ S^1 b S^1.
    bool j_leq(element_index a, element_index b) const {
      return _ideal[b].contains(a);
    }

    // The same order on J-class indices.
    bool j_class_leq(std::size_t ja, std::size_t jb) const {
      return j_leq(_J.members(ja).front(), _J.members(jb).front());
    }

   private:
    std::vector<ElementSet> _right;
    std::vector<ElementSet> _left;
    std::vector<ElementSet> _ideal;
    Partition               _R, _L, _H, _D, _J;
  };

  inline GreenStructure green(Semigroup const& S) {
    return GreenStructure(S);
  }

  // E(S)
  ElementSet idempotents(Semigroup const& S);

  // Reg(S) = { s : sxs = s for some x }
  ElementSet regular_elements(Semigroup const& S);

  // W(s) = { x : xsx = x }
  ElementSet weak_inverses(Semigroup const& S, element_index s);

  // V(s) = { x : xsx = x and sxs = s }
  ElementSet inverses(Semigroup const& S, element_index s);

  // The idempotent power of s.
  element_index idempotent_power(Semigroup const& S, element_index s);

  bool is_e_dense(Semigroup const& S);

  // The four equivalent formulations of E-density, evaluated separately:
  // [0] every s has t with st ∈ E, [1] ... ts ∈ E, [2] ... both,
  // [3] every s has a weak inverse.
  std::array<bool, 4> e_dense_characterizations(Semigroup const& S);

  bool is_periodic(Semigroup const& S);
  bool is_eventually_regular(Semigroup const& S);
  bool is_group_bound(Semigroup const& S);
  bool is_group_bound(Semigroup const& S, GreenStructure const& G);

  // An H-class that contains a regular element but no idempotent, if any.
  std::optional<ElementSet> ccr_witness(Semigroup const& S, GreenStructure const& G);

  bool is_conditionally_completely_regular(Semigroup const& S);
  bool is_conditionally_completely_regular(Semigroup const& S,
                                           GreenStructure const& G);

  // A is a subsemigroup that is a group under the restricted product.
  bool is_subgroup(Semigroup const& S, ElementSet const& A);

  // One J-class, and every H-class is a group.
  bool is_completely_simple(Semigroup const& S);

  // The subsemigroup A is completely simple. Throws not_a_subsemigroup.
  bool is_completely_simple(Semigroup const& S, ElementSet const& A);

  // Regular with central idempotents.
  bool is_clifford(Semigroup const& S);

  // H_e. Throws not_idempotent.
  ElementSet maximal_subgroup(Semigroup const& S, element_index e);
  ElementSet maximal_subgroup(Semigroup const& S, GreenStructure const& G,
                              element_index e);

  // K_e = { s : s^n ∈ H_e for some n >= 1 }. Throws not_idempotent.
  ElementSet k_class(Semigroup const& S, element_index e);
  ElementSet k_class(Semigroup const& S, GreenStructure const& G, element_index e);

}  // namespace strata

#endif  // STRATA_GREEN_HPP_
