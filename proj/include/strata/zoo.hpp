// Concrete semigroup families, the small-order table enumerator, and seeded
// random generators. Every table built here goes through
// Semigroup::from_flat, so it is associativity-checked.

#ifndef STRATA_ZOO_HPP_
#define STRATA_ZOO_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <map>       // for map
#include <optional>  // for optional
#include <random>    // for mt19937_64
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "element_set.hpp"  // for element_index
#include "extend.hpp"       // for ExtensionWitness, PartialHom
#include "semigroup.hpp"    // for Semigroup

namespace strata {

  using Rng = std::mt19937_64;

  // Seed used by every command that takes --seed when none is given.
  inline constexpr std::uint64_t default_seed = 20100301;

  namespace zoo {

    // Element k is a^(k+1); order h + r - 1.
    Semigroup monogenic(std::size_t h, std::size_t r);

    // Z_n with element k = g^k; element 0 is the identity.
    Semigroup cyclic_group(std::size_t n);

    // {0, (1,1), (1,2), (2,1), (2,2)} with (i,j)(k,l) = (i,l) if j = k, else 0.
    Semigroup brandt_b2();

    // (i,j)(k,l) = (i,l); element (i,j) has index i * q + j.
    Semigroup rectangular_band(std::size_t p, std::size_t q);

    // Element 0 is the zero and all products are 0.
    Semigroup zero_semigroup(std::size_t n);

    // xy = x.
    Semigroup left_zero(std::size_t n);

    // {0 < 1 < ... < n-1} under min.
    Semigroup chain(std::size_t n);

    // A bottom 0 below k pairwise incomparable atoms 1..k.
    Semigroup antichain_with_bottom(std::size_t k);

    // All maps {1,2} -> {1,2} composed left to right: x(fg) = (xf)g.
    // Indices: 0 = id, 1 = swap, 2 = c1, 3 = c2.
    Semigroup full_transformation_2();

    // Subsets of {1..k} as bitmasks, A∘B = A ∪ B when A, B are nonempty and
    // disjoint, ∅ otherwise. Throws order_too_large for k > 5.
    Semigroup powerset_nilsemigroup(std::size_t k);

    // Words of length < L over a letters in shortlex order, then 0 last.
    // Throws order_too_large past order 200.
    Semigroup free_nilpotent(std::size_t a, std::size_t L);

    // R followed by T, with r*t = t*r = t.
    Semigroup absorption_sum(Semigroup const& R, Semigroup const& T);

    // A strong semilattice of groups. linking[{alpha, beta}], for alpha >= beta
    // in the semilattice (alpha beta = beta), maps G_alpha into G_beta. Maps
    // with alpha == beta may be omitted and default to the identity.
    struct CliffordData {
      Semigroup                                                     semilattice;
      std::vector<Semigroup>                                        groups;
      std::map<std::pair<element_index, element_index>,
               std::vector<element_index>>                          linking;
    };

    // Every φ_{α,β} with α > β sends everything to the identity of G_β.
    CliffordData with_trivial_links(Semigroup const&       semilattice,
                                    std::vector<Semigroup> groups);

    // All groups equal as tables; every φ_{α,β} is the identity map.
    CliffordData with_identity_links(Semigroup const& semilattice,
                                     Semigroup const& group);

    // Elements are (α, g) in α-major order. Throws invalid_linking with the
    // offending pair {α, β} (or triple {α, β, γ} for transitivity), and
    // invalid_parameter when the semilattice or a group is not one.
    Semigroup clifford(CliffordData const& data);

    // Index of (α, g) in clifford(data).
    element_index clifford_index(CliffordData const& data, element_index alpha,
                                 element_index g);

    // Z_2 above the trivial group: indices 0 = e, 1 = g, 2 = f.
    Semigroup clifford_3();

    // N_2 = {A, 0} over clifford_3 with A -> g.
    PartialHom clifford_extension_4();

    // antichain_with_bottom(2) carrying three copies of Z_2 with identity
    // links; order 6.
    Semigroup clifford_6();

    // A strong semilattice of arbitrary semigroups: components[α] sits over α,
    // and for α > β the structure map sends S_α to the least idempotent of
    // S_β. Elements are (α, x) in α-major order.
    Semigroup strong_semilattice(Semigroup const&              semilattice,
                                 std::vector<Semigroup> const& components);

    struct PartialMapExtension {
      ExtensionWitness witness;
      // Domain bitmask of every Σ element: dom(s) on the ideal, dom(A) off it.
      std::vector<std::uint32_t> dom;
      std::size_t                n = 0;
      std::size_t                m = 0;
    };

    // S = G_1^0 × ... × G_n^0 and T = T'/I with T' the partial maps
    // {1..n} -> {1..m} under capped pointwise addition and I the maps with
    // image contained in {m}. φ(f)_i = g_i^{f(i)} on dom(f), 0 elsewhere.
    // picks[i] indexes into groups[i]. Throws invalid_parameter on bad
    // arguments, order_too_large when |Σ| > 400, and law_violation when the
    // chosen picks do not give a partial homomorphism.
    PartialMapExtension partial_map_extension(std::size_t                   n,
                                              std::size_t                   m,
                                              std::vector<Semigroup> const& groups,
                                              std::vector<element_index> const& picks);

    // Every associative table on n labeled elements, in lexicographic order of
    // the row-major table. Pull-based: each call to next() resumes the
    // backtracking search.
    class AssociativeTables {
     public:
      // Throws order_too_large for n > max_order.
      explicit AssociativeTables(std::size_t n);

      // Only the tables whose first prefix.size() entries equal prefix.
      AssociativeTables(std::size_t n, std::vector<element_index> prefix);

      std::optional<Semigroup> next();

      static constexpr std::size_t max_order = 4;

     private:
      bool consistent(std::size_t known) const;
      bool advance();

      std::size_t                _n;
      std::size_t                _fixed;
      std::vector<element_index> _table;
      std::size_t                _pos;
      bool                       _started = false;
      bool                       _done    = false;
    };

    // Smallest row-major table among all relabelings of S and of its dual.
    std::vector<element_index> canonical_form(Semigroup const& S);

    std::vector<Semigroup> enumerate_associative(std::size_t n, bool dedup = false);

    // Splits the search by the first row and runs the pieces under OpenMP.
    // Returns exactly what enumerate_associative returns, in the same order.
    std::vector<Semigroup> enumerate_associative_parallel(std::size_t n,
                                                          bool        dedup = false);

    // n x n entries drawn uniformly from [0, n); not checked.
    std::vector<element_index> uniform_random_table(std::size_t n, Rng& rng);

    // An associative table found by randomized backtracking.
    Semigroup random_associative(std::size_t n, Rng& rng);

    enum class Sampler { uniform, backtrack };

    // count draws of order n. uniform keeps only the draws that are
    // associative; backtrack always yields count tables.
    std::vector<Semigroup>
    sample_associative(std::size_t n, std::size_t count, Sampler sampler, Rng& rng);

    // A random (T, S, φ) with S Clifford of order at most 12 and T a
    // nilsemigroup with zero from a small pool.
    PartialHom random_partial_hom(Rng& rng);

    struct FixtureInfo {
      std::string name;
      std::string parameters;
      std::string description;
    };

    std::vector<FixtureInfo> const& fixtures();

    // Throws invalid_parameter for an unknown name or the wrong number of
    // parameters.
    Semigroup named_fixture(std::string const&              name,
                            std::vector<std::size_t> const& params);

  }  // namespace zoo

}  // namespace strata

#endif  // STRATA_ZOO_HPP_
