// Semilattice decomposition of conditionally completely regular (CCR)
// semigroups.
//
// On a CCR semigroup, s ρ t holds when W(s) and W(t) meet exactly the same
// D-classes. ρ is a congruence with a semilattice quotient; when S is also
// group-bound its classes are the Archimedean components
// K_{J_e} = ⋃ { K_f : f ∈ E(J_e) }.

#ifndef STRATA_DECOMPOSE_HPP_
#define STRATA_DECOMPOSE_HPP_

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "element_set.hpp"  // for ElementSet
#include "green.hpp"        // for GreenStructure
#include "partition.hpp"    // for Partition
#include "semigroup.hpp"    // for Semigroup

namespace strata {

  struct Component {
    ElementSet  elements;
    ElementSet  regular_part;  // Reg(S) ∩ elements
    ElementSet  base;          // Base of the component as a semigroup
    std::size_t height = 0;
    bool        is_archimedean         = false;
    bool        is_e_dense             = false;
    bool        completely_simple_base = false;
    bool        finitely_stratified    = false;
  };

  struct DecompositionReport {
    Partition              rho;
    Semigroup              quotient;  // on ρ-class indices
    std::vector<Component> components;  // components[k] is ρ-class k

    // α <= β in the quotient semilattice, i.e. αβ = α.
    bool leq(std::size_t alpha, std::size_t beta) const {
      return quotient(static_cast<element_index>(alpha),
                      static_cast<element_index>(beta))
             == alpha;
    }
  };

  // The set of D-class indices met by W(s).
  ElementSet footprint(Semigroup const& S, GreenStructure const& G, element_index s);

  // Throws not_conditionally_completely_regular; the witness is the
  // offending H-class.
  Partition rho_partition(Semigroup const& S);
  Partition rho_partition(Semigroup const& S, GreenStructure const& G);

  // The same relation read off H-classes instead of D-classes.
  Partition rho_partition_by_h_classes(Semigroup const& S, GreenStructure const& G);

  // Builds the decomposition and checks the structure theorem on it. Any
  // failure of the theorem raises InternalError.
  DecompositionReport verify_rho(Semigroup const& S);

  // Partition into the sets K_{J_e}. Throws not_group_bound or
  // not_conditionally_completely_regular.
  Partition kje_partition(Semigroup const& S);
  Partition kje_partition(Semigroup const& S, GreenStructure const& G);

  // For all a, b ∈ A some a^n with n <= |A| + 1 lies in A^1 b A^1.
  // Throws not_a_subsemigroup.
  bool archimedean(Semigroup const& S, ElementSet const& A);

  // result[k] is true when W(s) meets component k.
  std::vector<bool> weak_inverse_location(Semigroup const&           S,
                                          DecompositionReport const& report,
                                          element_index              s);

}  // namespace strata

#endif  // STRATA_DECOMPOSE_HPP_
