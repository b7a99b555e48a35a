#include <algorithm>  // for sort
#include <set>        // for set

#include "catch_amalgamated.hpp"

#include "strata/core.hpp"
#include "strata/decompose.hpp"
#include "strata/extend.hpp"
#include "strata/green.hpp"
#include "strata/stratify.hpp"
#include "strata/zoo.hpp"

#include "test_support.hpp"

namespace strata {
  using namespace test;

  namespace {
    std::vector<std::vector<element_index>> tables_of(std::vector<Semigroup> const& v) {
      std::vector<std::vector<element_index>> out;
      for (auto const& S : v) {
        out.push_back(S.flat_table());
      }
      return out;
    }

    // Canonical form by brute force over all relabelings and the dual.
    std::vector<element_index> canonical_oracle(std::size_t                       n,
                                                std::vector<element_index> const& t) {
      std::vector<element_index> perm(n);
      for (std::size_t i = 0; i < n; ++i) {
        perm[i] = static_cast<element_index>(i);
      }
      std::vector<element_index> best;
      do {
        std::vector<element_index> inv(n);
        for (std::size_t i = 0; i < n; ++i) {
          inv[perm[i]] = static_cast<element_index>(i);
        }
        for (bool dual : {false, true}) {
          std::vector<element_index> u(n * n);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              auto const a = inv[i], b = inv[j];
              auto const v = dual ? t[b * n + a] : t[a * n + b];
              u[i * n + j] = perm[v];
            }
          }
          if (best.empty() || u < best) {
            best = u;
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }
  }  // namespace

  TEST_CASE("monogenic", "[zoo]") {
    auto const M = zoo::monogenic(3, 2);
    CHECK(M.size() == 4);
    CHECK(M(at(M, "a"), at(M, "a^4")) == at(M, "a^3"));
    CHECK(isomorphic(zoo::monogenic(1, 3), zoo::cyclic_group(3)));
    auto const R = stratify(zoo::monogenic(4, 1));
    CHECK(R.height == 4);
    CHECK(R.base.size() == 1);
    CHECK(kind_of([] { zoo::monogenic(0, 1); }) == ErrorKind::invalid_parameter);
  }

  TEST_CASE("monogenic grid", "[zoo][stratify][property]") {
    for (std::size_t h = 1; h <= 6; ++h) {
      for (std::size_t r = 1; r <= 6; ++r) {
        auto const S = zoo::monogenic(h, r);
        CHECK(S.size() == h + r - 1);
        auto const R = stratify(S);
        CHECK(R.height == h);
        CHECK(R.base.size() == r);
      }
    }
  }

  TEST_CASE("standard fixtures", "[zoo]") {
    CHECK_FALSE(is_conditionally_completely_regular(zoo::brandt_b2()));
    auto const RB = zoo::rectangular_band(2, 2);
    CHECK(is_completely_simple(RB));
    CHECK(stratify(RB).base == ElementSet::full(4));
    CHECK(is_band(zoo::left_zero(3)));
    CHECK(is_semilattice(zoo::chain(3)));
    CHECK(is_semilattice(zoo::antichain_with_bottom(3)));
    CHECK(zoo::zero_semigroup(3).zero() == element_index{0});

    auto const F = zoo::free_nilpotent(2, 3);
    CHECK(F.size() == 7);
    CHECK(is_grillet_stratified(F));
    CHECK(stratify(F).height == 3);
    CHECK(zoo::free_nilpotent(1, 3).size() == 3);
    CHECK(kind_of([] { zoo::free_nilpotent(3, 6); }) == ErrorKind::order_too_large);
  }

  TEST_CASE("powerset nilsemigroup", "[zoo]") {
    CHECK(isomorphic(zoo::powerset_nilsemigroup(1), zoo::named_fixture("null", {})));
    auto const P = zoo::powerset_nilsemigroup(2);
    CHECK(power_set(P, 3) == labelled(P, {"{}"}));
    auto const P3 = zoo::powerset_nilsemigroup(3);
    for (element_index x = 0; x < P3.size(); ++x) {
      CHECK(P3(x, x) == at(P3, "{}"));
    }
    CHECK(stratify(P3).height == 4);
    CHECK(zoo::powerset_nilsemigroup(5).size() == 32);
    CHECK(kind_of([] { zoo::powerset_nilsemigroup(6); }) == ErrorKind::order_too_large);
  }

  TEST_CASE("clifford", "[zoo][clifford]") {
    auto const C = zoo::clifford_3();
    CHECK(is_clifford(C));
    CHECK(C.size() == 3);
    CHECK(isomorphic(zoo::clifford(zoo::with_identity_links(zoo::chain(1),
                                                            zoo::cyclic_group(3))),
                     zoo::cyclic_group(3)));
    auto const C6 = zoo::clifford_6();
    CHECK(C6.size() == 6);
    CHECK(is_clifford(C6));
    CHECK(rho_partition(C6).number_of_classes() == 3);

    auto data = zoo::with_trivial_links(zoo::chain(3), {zoo::cyclic_group(2),
                                                        zoo::cyclic_group(3),
                                                        zoo::cyclic_group(2)});
    auto const S = zoo::clifford(data);
    CHECK(S.size() == 7);
    CHECK(is_clifford(S));
    CHECK(is_weakly_reductive(S));
    CHECK(zoo::clifford_index(data, 1, 2) == 4);
  }

  TEST_CASE("clifford rejects bad linking", "[zoo][clifford]") {
    // Z_2 over Z_2 along the 2-chain; a non-homomorphism from the top group.
    auto data = zoo::with_identity_links(zoo::chain(2), zoo::cyclic_group(2));
    data.linking[{1, 0}] = {1, 1};
    CHECK(kind_of([&] { zoo::clifford(data); }) == ErrorKind::invalid_linking);
    CHECK(witness_of([&] { zoo::clifford(data); }) == std::vector<std::size_t>{1, 0});

    // Non-transitive links on the 3-chain.
    auto t = zoo::with_identity_links(zoo::chain(3), zoo::cyclic_group(2));
    t.linking[{2, 0}] = {0, 0};
    CHECK(kind_of([&] { zoo::clifford(t); }) == ErrorKind::invalid_linking);
    CHECK(witness_of([&] { zoo::clifford(t); }).size() == 3);

    auto bad        = zoo::with_identity_links(zoo::chain(2), zoo::cyclic_group(2));
    bad.semilattice = zoo::left_zero(2);
    CHECK(kind_of([&] { zoo::clifford(bad); }) == ErrorKind::invalid_parameter);
    auto nogroup = zoo::with_identity_links(zoo::chain(2), zoo::named_fixture("null", {}));
    CHECK(kind_of([&] { zoo::clifford(nogroup); }) == ErrorKind::invalid_parameter);
  }

  TEST_CASE("absorption_sum", "[zoo]") {
    auto const N = zoo::named_fixture("null", {});
    auto const Y = zoo::cyclic_group(1);

    auto const A = zoo::absorption_sum(N, Y);
    CHECK(A.size() == 3);
    CHECK(stratify(A).base.contains(2));

    CHECK(isomorphic(zoo::absorption_sum(Y, Y), zoo::chain(2)));

    auto const B = zoo::absorption_sum(zoo::monogenic(2, 1), zoo::cyclic_group(2));
    CHECK(set(B, {2, 3}).is_subset_of(stratify(B).base));
  }

  TEST_CASE("absorption_sum laws", "[zoo][property]") {
    std::vector<Semigroup> const pieces{
        zoo::cyclic_group(1),  zoo::cyclic_group(2),  zoo::named_fixture("null", {}),
        zoo::monogenic(3, 2),  zoo::chain(2),         zoo::left_zero(2),
        zoo::brandt_b2(),      zoo::powerset_nilsemigroup(2)};
    for (auto const& R : pieces) {
      for (auto const& T : pieces) {
        auto const S = zoo::absorption_sum(R, T);
        ElementSet Tset(S.size());
        for (std::size_t t = 0; t < T.size(); ++t) {
          Tset.insert(static_cast<element_index>(R.size() + t));
        }
        CHECK(Tset.is_subset_of(stratify(S).base));
        CHECK(is_ideal(S, Tset));
        // S / T is R with a zero adjoined.
        CHECK(isomorphic(rees_quotient(S, Tset).semigroup, adjoin_zero(R)));
      }
    }
  }

  TEST_CASE("partial map extension", "[zoo][extend]") {
    auto const Z2 = zoo::cyclic_group(2);

    auto const e1 = zoo::partial_map_extension(1, 2, {Z2}, {1});
    CHECK(e1.witness.s.size() == 3);
    CHECK(e1.witness.t.size() == 2);
    CHECK(e1.witness.sigma.size() == 4);
    auto const cd1 = clifford_decompose(e1.witness.sigma, e1.witness.ideal);
    CHECK(cd1.components.size() == 2);
    std::vector<std::size_t> d1(e1.dom.begin(), e1.dom.end());
    CHECK(cd1.classes == Partition::from_labels(d1));

    // Every defined value reaches the cap, so T is just {0}.
    auto const e2 = zoo::partial_map_extension(2, 1, {Z2, Z2}, {1, 1});
    CHECK(e2.witness.t.size() == 1);
    CHECK(e2.witness.sigma.size() == 9);

    auto const e3 = zoo::partial_map_extension(2, 2, {Z2, Z2}, {1, 0});
    CHECK(e3.witness.sigma.size() == 14);
    auto const cd3 = clifford_decompose(e3.witness.sigma, e3.witness.ideal);
    CHECK(cd3.components.size() == 4);
    std::vector<std::size_t> d3(e3.dom.begin(), e3.dom.end());
    CHECK(cd3.classes == Partition::from_labels(d3));
    CHECK(std::set<std::uint32_t>(e3.dom.begin(), e3.dom.end()).size() == 4);

    CHECK(kind_of([&] { zoo::partial_map_extension(1, 2, {Z2}, {2}); })
          == ErrorKind::invalid_parameter);
    CHECK(kind_of([&] { zoo::partial_map_extension(2, 2, {Z2}, {1}); })
          == ErrorKind::invalid_parameter);
    CHECK(kind_of([&] {
            zoo::partial_map_extension(1, 2, {zoo::named_fixture("null", {})}, {0});
          })
          == ErrorKind::invalid_parameter);
    std::vector<Semigroup> const big(4, zoo::cyclic_group(5));
    CHECK(kind_of([&] { zoo::partial_map_extension(4, 3, big, {1, 1, 1, 1}); })
          == ErrorKind::order_too_large);
  }

  TEST_CASE("zoo outputs are valid", "[zoo][property]") {
    for (auto const& info : zoo::fixtures()) {
      std::vector<std::size_t> params;
      for (char c : info.parameters) {
        if (c != ' ') {
          params.push_back(2);
        }
      }
      auto const S = zoo::named_fixture(info.name, params);
      CHECK(Semigroup::from_flat(S.size(), S.flat_table()).flat_table() == S.flat_table());
    }
  }

  TEST_CASE("named_fixture errors", "[zoo]") {
    CHECK(kind_of([] { zoo::named_fixture("nope", {}); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { zoo::named_fixture("cyclic", {}); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { zoo::named_fixture("null", {1}); }) == ErrorKind::invalid_parameter);
    CHECK(zoo::named_fixture("monogenic", {3, 2}) == zoo::monogenic(3, 2));
  }

  TEST_CASE("enumeration matches the filter-all-tables oracle", "[zoo][enumerate]") {
    CHECK(zoo::enumerate_associative(1).size() == 1);
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(tables_of(zoo::enumerate_associative(n)) == oracle::all_associative(n));
    }
    CHECK(zoo::enumerate_associative(4).size() == 3492);
    CHECK(kind_of([] { zoo::enumerate_associative(5); }) == ErrorKind::order_too_large);
  }

  TEST_CASE("enumeration up to isomorphism and anti-isomorphism", "[zoo][enumerate]") {
    std::size_t const expected[] = {0, 1, 4, 18, 126};
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const reps = zoo::enumerate_associative(n, true);
      CHECK(reps.size() == expected[n]);
      std::set<std::vector<element_index>> forms;
      for (auto const& S : reps) {
        forms.insert(zoo::canonical_form(S));
      }
      CHECK(forms.size() == reps.size());
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      std::set<std::vector<element_index>> oracle_forms;
      for (auto const& t : oracle::all_associative(n)) {
        oracle_forms.insert(canonical_oracle(n, t));
      }
      CHECK(oracle_forms.size() == expected[n]);
      for (auto const& S : zoo::enumerate_associative(n)) {
        CHECK(zoo::canonical_form(S) == canonical_oracle(n, S.flat_table()));
      }
    }
  }

  TEST_CASE("parallel enumeration equals serial", "[zoo][enumerate]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (bool dedup : {false, true}) {
        CHECK(tables_of(zoo::enumerate_associative_parallel(n, dedup))
              == tables_of(zoo::enumerate_associative(n, dedup)));
      }
    }
  }

  TEST_CASE("AssociativeTables with a prefix", "[zoo][enumerate]") {
    zoo::AssociativeTables it(2, {0, 0});
    std::vector<std::vector<element_index>> got;
    while (auto S = it.next()) {
      got.push_back(S->flat_table());
    }
    std::vector<std::vector<element_index>> want;
    for (auto const& t : oracle::all_associative(2)) {
      if (t[0] == 0 && t[1] == 0) {
        want.push_back(t);
      }
    }
    CHECK(got == want);
  }

  TEST_CASE("sampling is deterministic under a seed", "[zoo][random]") {
    for (auto sampler : {zoo::Sampler::uniform, zoo::Sampler::backtrack}) {
      Rng  a(7), b(7);
      auto x = zoo::sample_associative(3, 200, sampler, a);
      auto y = zoo::sample_associative(3, 200, sampler, b);
      CHECK(tables_of(x) == tables_of(y));
      for (auto const& S : x) {
        CHECK(oracle::associative(3, S.flat_table()));
      }
    }
    Rng  c(7);
    auto back = zoo::sample_associative(5, 20, zoo::Sampler::backtrack, c);
    CHECK(back.size() == 20);

    Rng  d(11), e(11);
    CHECK(zoo::uniform_random_table(5, d) == zoo::uniform_random_table(5, e));
    Rng  f(11), g(11);
    CHECK(zoo::random_partial_hom(f) == zoo::random_partial_hom(g));
  }

  TEST_CASE("random partial homomorphisms target Clifford semigroups", "[zoo][random]") {
    Rng rng(default_seed);
    for (int i = 0; i < 30; ++i) {
      auto const phi = zoo::random_partial_hom(rng);
      CHECK(is_clifford(phi.target()));
      CHECK(phi.target().size() <= 12);
      CHECK(phi.source().zero().has_value());
    }
  }

}  // namespace strata
