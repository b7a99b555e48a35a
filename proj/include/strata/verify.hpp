// Property suites. Each check recomputes a structural claim about a finite
// semigroup and records a Violation when it fails. Runners exist in a serial
// form and an OpenMP form; both return the same sorted report.

#ifndef STRATA_VERIFY_HPP_
#define STRATA_VERIFY_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "element_set.hpp"  // for element_index
#include "extend.hpp"       // for PartialHom
#include "semigroup.hpp"    // for Semigroup

namespace strata::verify {

  enum Suite : unsigned {
    stratification = 1u << 0,
    green          = 1u << 1,
    decomposition  = 1u << 2,
    master         = 1u << 3,
    uniqueness     = 1u << 4,
    all_suites     = (1u << 5) - 1
  };

  struct Violation {
    std::size_t                order = 0;
    std::vector<element_index> table;
    std::string                suite;
    std::string                property;
    std::string                detail;

    friend auto operator<=>(Violation const&, Violation const&) = default;
    friend bool operator==(Violation const&, Violation const&)  = default;
  };

  struct Stats {
    std::size_t tables              = 0;
    std::size_t ccr                 = 0;
    std::size_t congruences         = 0;
    std::size_t band_equality_cases = 0;  // W(st) = W(t)W(s) checked
    std::size_t extensions          = 0;
    std::size_t products            = 0;

    friend bool operator==(Stats const&, Stats const&) = default;
  };

  struct Report {
    std::vector<Violation> violations;
    // Observations are not failures: currently the cases where E(S) is a band
    // but W(st) = W(t)W(s) fails.
    std::vector<Violation> observations;
    Stats                  stats;

    bool ok() const noexcept {
      return violations.empty();
    }

    Report& operator+=(Report const& other);

    // Sorts both lists and removes duplicates.
    void normalize();
  };

  // The Semigroup a violation refers to, rebuilt from its table.
  Semigroup table_of(Violation const& v);

  void check_stratification(Semigroup const& S, Report& out);
  void check_green(Semigroup const& S, Report& out);
  void check_decomposition(Semigroup const& S, Report& out);
  void check_master(Semigroup const& S, Report& out);
  void check_uniqueness(Semigroup const& S, Report& out);

  // Every suite in the mask on one table. Never throws: an exception from the
  // library becomes a violation of the suite that raised it.
  void check_table(Semigroup const& S, unsigned suites, Report& out);

  Report run_serial(std::vector<Semigroup> const& tables, unsigned suites = all_suites);
  Report run_parallel(std::vector<Semigroup> const& tables, unsigned suites = all_suites);

  // Base(S × T) = Base(S) × Base(T) and (S × T)^m = S^m × T^m.
  void   check_product(Semigroup const& S, Semigroup const& T, Report& out);
  Report run_products_serial(std::vector<Semigroup> const& left,
                             std::vector<Semigroup> const& right);
  Report run_products_parallel(std::vector<Semigroup> const& left,
                               std::vector<Semigroup> const& right);

  // The product checks used for order n: every pair of order-n tables when
  // n <= 3; for n = 4, every order-4 table against every order-2 table and
  // the order-4 classes against the order-3 classes up to isomorphism and
  // anti-isomorphism.
  Report run_products_for_order(std::size_t n, bool parallel = true);

  // Round trip and Clifford decomposition of the extension built from phi,
  // whose target must be Clifford. dom, when given, is a labelling of the Σ
  // elements whose classes must be exactly the decomposition's classes.
  void check_extension(PartialHom const&                        phi,
                       std::optional<std::vector<std::uint32_t>> dom,
                       Report&                                  out);

  // check_extension on random_count triples drawn from seed, then on every
  // partial-map extension with n <= 2, m <= 3, groups Z_2 or Z_3 and any
  // picks that give a partial homomorphism.
  void check_extension_round_trips(std::size_t   random_count,
                                   std::uint64_t seed,
                                   Report&       out);

  // Every extension of order k + 1 <= 4 of a monoid ideal of order k is
  // strict.
  void check_monoid_extensions(std::size_t max_order, Report& out);

  // Strong semilattices assembled from CCR pieces are CCR, and the union of
  // the component bases lies in the base.
  void check_zoo_semilattices(Report& out);

}  // namespace strata::verify

#endif  // STRATA_VERIFY_HPP_
