// Ideal extensions determined by partial homomorphisms.
//
// Given a semigroup T with zero, a semigroup S and a partial homomorphism
// A ↦ Ā from T \ {0} to S, the extension Σ = S ∪ (T \ {0}) multiplies by
//
//   A * B = AB if AB != 0 in T, otherwise Ā B̄
//   A * s = Ā s,   s * A = s Ā,   s * t = st.
//
// Such extensions are strict: every A acts on S like Ā. Conversely a strict
// extension of a weakly reductive S determines its partial homomorphism
// uniquely, which is what recover_partial_hom computes.

#ifndef STRATA_EXTEND_HPP_
#define STRATA_EXTEND_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "element_set.hpp"  // for ElementSet, element_index
#include "partition.hpp"    // for Partition
#include "semigroup.hpp"    // for Semigroup

namespace strata {

  class PartialHom {
   public:
    Semigroup const& source() const noexcept {
      return _source;
    }

    Semigroup const& target() const noexcept {
      return _target;
    }

    // Ā; no_element for the zero of the source.
    element_index operator()(element_index A) const {
      return _map[A];
    }

    std::vector<element_index> const& map() const noexcept {
      return _map;
    }

    friend bool operator==(PartialHom const&, PartialHom const&) = default;

   private:
    friend PartialHom validate_partial_hom(Semigroup                  T,
                                           Semigroup                  S,
                                           std::vector<element_index> map);

    PartialHom(Semigroup T, Semigroup S, std::vector<element_index> map)
        : _source(std::move(T)), _target(std::move(S)), _map(std::move(map)) {}

    Semigroup                  _source;
    Semigroup                  _target;
    std::vector<element_index> _map;
  };

  // map[A] = Ā for every nonzero A of T; the entry at the zero is ignored.
  // Throws no_zero_in_source, map_incomplete, index_out_of_range, or
  // law_violation with the first failing pair {A, B}.
  PartialHom validate_partial_hom(Semigroup T, Semigroup S,
                                  std::vector<element_index> map);

  // Σ together with the identifications of its parts. Build order puts the
  // elements of S first, in S's order, then T \ {0} in T's order.
  struct ExtensionWitness {
    Semigroup  sigma;
    ElementSet ideal;
    Semigroup  t;
    Semigroup  s;
    std::vector<element_index> t_of_sigma;  // no_element on the ideal
    std::vector<element_index> sigma_of_t;  // no_element at the zero of T
    std::vector<element_index> s_of_sigma;  // no_element off the ideal
    std::vector<element_index> sigma_of_s;
  };

  ExtensionWitness build_extension(PartialHom const& phi);

  enum class ExtensionKind { strict, pure, mixed };

  char const* to_string(ExtensionKind kind) noexcept;

  struct ExtensionClassification {
    ExtensionKind kind;
    // For x outside the ideal: the least s in the ideal acting on the ideal
    // exactly as x does from both sides, if any. For x in the ideal: x.
    std::vector<std::optional<element_index>> acting_as;
  };

  // An extension with nothing outside the ideal is reported as strict.
  // Throws not_an_ideal.
  ExtensionClassification classify_extension(Semigroup const& sigma,
                                             ElementSet const& ideal);

  struct RecoveredExtension {
    PartialHom       phi;      // from Σ / ideal to the ideal as a semigroup
    ExtensionWitness witness;  // t = Σ / ideal, s = the ideal
  };

  // Throws not_an_ideal, not_weakly_reductive (witness: an interchangeable
  // pair, in Σ indices) or not_strict (witness: an element with no matching
  // action).
  RecoveredExtension recover_partial_hom(Semigroup const& sigma, ElementSet const& ideal);

  // The same recovery expressed over the witness's own T and S.
  PartialHom recover_partial_hom(ExtensionWitness const& witness);

  struct CliffordComponent {
    element_index idempotent;  // e_α, in Σ indices
    ElementSet    group;       // G_α
    ElementSet    extension;   // Σ_α = G_α ∪ { A : Ā ∈ G_α }
    Semigroup     extension_quotient;  // Σ_α / G_α
    bool          quotient_grillet_stratified;
  };

  struct CliffordDecomposition {
    PartialHom                     phi;
    Partition                      classes;     // the Σ_α, as a congruence
    Semigroup                      quotient;    // Σ / ~ on class indices
    std::vector<CliffordComponent> components;  // components[k] is class k
  };

  // Decomposes a strict extension of a Clifford semigroup into extensions of
  // its maximal subgroups. Throws not_an_ideal, not_clifford or not_strict;
  // any failure of the structure theorem raises InternalError.
  CliffordDecomposition clifford_decompose(Semigroup const& sigma,
                                           ElementSet const& ideal);

  struct GroupExtensionPart {
    ElementSet extension;  // Σ_α
    ElementSet group;      // G_α ⊆ Σ_α
  };

  // For a semilattice of extensions Σ_α of groups G_α whose union S is an
  // ideal of Σ: the partial homomorphism A ↦ A e_α from Σ / S to S. Throws
  // invalid_parameter if the parts are not a semilattice of extensions of
  // groups, group_union_not_ideal if S is not an ideal.
  PartialHom canonical_phi(Semigroup const&                       sigma,
                           std::vector<GroupExtensionPart> const& parts);

  // Σ with its elements reordered: ideal members first, then the rest, each
  // in increasing order. This is the layout build_extension produces.
  Semigroup ideal_first(Semigroup const& sigma, ElementSet const& ideal);

}  // namespace strata

#endif  // STRATA_EXTEND_HPP_
