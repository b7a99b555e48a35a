#include "catch_amalgamated.hpp"

#include "strata/core.hpp"
#include "strata/extend.hpp"
#include "strata/green.hpp"
#include "strata/stratify.hpp"
#include "strata/zoo.hpp"

#include "test_support.hpp"

namespace strata {
  using namespace test;

  namespace {
    Semigroup n2() {
      return zoo::named_fixture("null", {});  // 0, a
    }

    // A, A^2, 0 with A^3 = 0.
    Semigroup nil3() {
      return zoo::free_nilpotent(1, 3);
    }

    std::vector<GroupExtensionPart> parts_of(CliffordDecomposition const& cd) {
      std::vector<GroupExtensionPart> parts;
      for (auto const& c : cd.components) {
        parts.push_back({c.extension, c.group});
      }
      return parts;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // validate_partial_hom
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("validate_partial_hom accepts lawful maps", "[extend][validate]") {
    auto const Z   = zoo::cyclic_group(2);  // e, g
    auto const phi = validate_partial_hom(n2(), Z, {0, 1});
    CHECK(phi(1) == 1);
    CHECK(phi(0) == no_element);

    auto const T    = nil3();
    auto const phi3 = validate_partial_hom(T, Z, {1, 0, 0});
    CHECK(phi3(at(T, "a")) == 1);
    CHECK(phi3(at(T, "aa")) == 0);
    CHECK(phi3(at(T, "0")) == no_element);
  }

  TEST_CASE("validate_partial_hom errors", "[extend][validate]") {
    auto const Z = zoo::cyclic_group(2);
    auto const T = nil3();
    CHECK(kind_of([&] { validate_partial_hom(T, Z, {1, 1, 0}); })
          == ErrorKind::law_violation);
    CHECK(witness_of([&] { validate_partial_hom(T, Z, {1, 1, 0}); })
          == std::vector<std::size_t>{0, 0});
    CHECK(kind_of([&] { validate_partial_hom(Z, Z, {0, 1}); })
          == ErrorKind::no_zero_in_source);
    CHECK(kind_of([&] { validate_partial_hom(T, Z, {1, 0}); }) == ErrorKind::map_incomplete);
    CHECK(kind_of([&] { validate_partial_hom(T, Z, {1, no_element, 0}); })
          == ErrorKind::map_incomplete);
    CHECK(kind_of([&] { validate_partial_hom(T, Z, {1, 2, 0}); })
          == ErrorKind::index_out_of_range);
  }

  ////////////////////////////////////////////////////////////////////////
  // build_extension
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("build_extension by hand", "[extend][build]") {
    auto const Z   = zoo::cyclic_group(2);
    auto const w   = build_extension(validate_partial_hom(n2(), Z, {0, 1}));
    auto const& X  = w.sigma;
    REQUIRE(X.size() == 3);
    element_index const e = 0, g = 1, A = 2;
    CHECK(X(A, A) == e);
    CHECK(X(A, e) == g);
    CHECK(X(A, g) == e);
    CHECK(X(e, A) == g);
    CHECK(w.ideal == set(X, {0, 1}));
    CHECK(w.sigma_of_t == std::vector<element_index>{no_element, A});
    CHECK(w.t_of_sigma == std::vector<element_index>{no_element, no_element, 1});
    CHECK(w.s_of_sigma == std::vector<element_index>{0, 1, no_element});
    CHECK(isomorphic(rees_quotient(X, w.ideal).semigroup, n2()));
  }

  TEST_CASE("extension into the trivial group is T with 0 relabelled", "[extend][build]") {
    auto const one = zoo::cyclic_group(1);
    for (auto const& T : {n2(), nil3(), zoo::powerset_nilsemigroup(2), zoo::free_nilpotent(2, 3)}) {
      std::vector<element_index> map(T.size(), 0);
      auto const                 w = build_extension(validate_partial_hom(T, one, map));
      CHECK(isomorphic(w.sigma, T));
    }
  }

  TEST_CASE("build_extension is associative and strict", "[extend][build][property]") {
    Rng rng(default_seed);
    for (int i = 0; i < 100; ++i) {
      auto const phi = zoo::random_partial_hom(rng);
      auto const w   = build_extension(phi);
      CHECK(classify_extension(w.sigma, w.ideal).kind == ExtensionKind::strict);
      CHECK(isomorphic(rees_quotient(w.sigma, w.ideal).semigroup, phi.source()));
      CHECK(subsemigroup(w.sigma, w.ideal).semigroup == phi.target());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // classify_extension
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("classify_extension", "[extend][classify]") {
    auto const L1 = adjoin_identity(zoo::left_zero(2));
    auto const c  = classify_extension(L1, set(L1, {0, 1}));
    CHECK(c.kind == ExtensionKind::pure);
    CHECK_FALSE(c.acting_as[2]);
    CHECK(c.acting_as[0] == element_index{0});

    auto const N  = n2();
    auto const cn = classify_extension(N, set(N, {0}));
    CHECK(cn.kind == ExtensionKind::strict);
    CHECK(cn.acting_as[1] == element_index{0});

    CHECK(classify_extension(N, ElementSet::full(2)).kind == ExtensionKind::strict);
    CHECK(kind_of([&] { classify_extension(N, set(N, {1})); }) == ErrorKind::not_an_ideal);
    CHECK(std::string(to_string(ExtensionKind::mixed)) == "mixed");
  }

  TEST_CASE("classify_extension finds mixed extensions", "[extend][classify]") {
    // Over the left zero ideal {0, 1}: the element from N2 acts as 0, the
    // adjoined identity acts as nothing.
    auto const L = zoo::left_zero(2);
    auto const S = adjoin_identity(build_extension(validate_partial_hom(n2(), L, {0, 0})).sigma);
    auto const c = classify_extension(S, set(S, {0, 1}));
    CHECK(c.acting_as[2] == element_index{0});
    CHECK_FALSE(c.acting_as[3]);
    CHECK(c.kind == ExtensionKind::mixed);
  }

  TEST_CASE("extensions of monoids are strict", "[extend][classify][property]") {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (auto const& sigma : zoo::enumerate_associative(n)) {
        for (element_index z = 0; z < n; ++z) {
          auto ideal = ElementSet::full(n);
          ideal.erase(z);
          if (is_ideal(sigma, ideal) && subsemigroup(sigma, ideal).semigroup.identity()) {
            CHECK(classify_extension(sigma, ideal).kind == ExtensionKind::strict);
          }
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // recover_partial_hom
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("recover_partial_hom round trips", "[extend][recover]") {
    auto const phi = zoo::clifford_extension_4();
    auto const w   = build_extension(phi);
    CHECK(recover_partial_hom(w) == phi);

    auto const r = recover_partial_hom(w.sigma, w.ideal);
    CHECK(r.phi.source().size() == 2);
    CHECK(r.witness.sigma == w.sigma);

    Rng rng(default_seed + 7);
    for (int i = 0; i < 100; ++i) {
      auto const p = zoo::random_partial_hom(rng);
      CHECK(recover_partial_hom(build_extension(p)) == p);
    }
  }

  TEST_CASE("recover_partial_hom errors", "[extend][recover]") {
    // The order-3 zero semigroup {0, 1, 2} as an ideal of the order-4 one.
    auto const Z4 = zoo::zero_semigroup(4);
    auto const I  = set(Z4, {0, 1, 2});
    CHECK(kind_of([&] { recover_partial_hom(Z4, I); }) == ErrorKind::not_weakly_reductive);
    auto const w = witness_of([&] { recover_partial_hom(Z4, I); });
    REQUIRE(w.size() == 2);
    CHECK(interchangeable(Z4, static_cast<element_index>(w[0]),
                          static_cast<element_index>(w[1])));
    CHECK(I.contains(static_cast<element_index>(w[0])));
    CHECK(I.contains(static_cast<element_index>(w[1])));

    auto const L1 = adjoin_identity(zoo::left_zero(2));
    CHECK(kind_of([&] { recover_partial_hom(L1, set(L1, {0, 1})); })
          == ErrorKind::not_strict);
    CHECK(kind_of([&] { recover_partial_hom(L1, set(L1, {0})); })
          == ErrorKind::not_an_ideal);

    auto tampered = build_extension(zoo::clifford_extension_4());
    tampered.ideal.erase(0);
    CHECK(kind_of([&] { recover_partial_hom(tampered); }) == ErrorKind::invalid_parameter);
  }

  ////////////////////////////////////////////////////////////////////////
  // clifford_decompose and canonical_phi
  ////////////////////////////////////////////////////////////////////////

  TEST_CASE("clifford_decompose of the order-4 fixture", "[extend][clifford]") {
    auto const  w  = build_extension(zoo::clifford_extension_4());
    auto const& X  = w.sigma;  // e, g, f, A
    auto const  cd = clifford_decompose(X, w.ideal);
    REQUIRE(cd.components.size() == 2);
    CHECK(isomorphic(cd.quotient, zoo::chain(2)));
    auto const& top = cd.components[cd.classes.class_of(0)];
    auto const& bot = cd.components[cd.classes.class_of(2)];
    CHECK(top.extension == set(X, {0, 1, 3}));
    CHECK(top.group == set(X, {0, 1}));
    CHECK(top.idempotent == 0);
    CHECK(bot.extension == set(X, {2}));
    CHECK(bot.group == set(X, {2}));
    CHECK(top.quotient_grillet_stratified);

    auto const psi = canonical_phi(X, parts_of(cd));
    CHECK(psi(0) == 1);  // A e = g, with A first in Σ / S
    CHECK(build_extension(psi).sigma == ideal_first(X, w.ideal));
  }

  TEST_CASE("clifford_decompose with nothing outside the ideal", "[extend][clifford]") {
    auto const C  = zoo::clifford_6();
    auto const cd = clifford_decompose(C, ElementSet::full(C.size()));
    CHECK(cd.components.size() == 3);
    for (auto const& c : cd.components) {
      CHECK(c.extension == c.group);
      CHECK(is_subgroup(C, c.group));
    }
    auto const psi = canonical_phi(C, parts_of(cd));
    CHECK(psi.source().size() == 1);
    CHECK(build_extension(psi).sigma == C);
  }

  TEST_CASE("clifford_decompose of the partial map example", "[extend][clifford]") {
    std::vector<Semigroup> const groups(2, zoo::cyclic_group(2));
    auto const e  = zoo::partial_map_extension(2, 2, groups, {1, 1});
    auto const cd = clifford_decompose(e.witness.sigma, e.witness.ideal);
    // One component per subset M of {1, 2}.
    CHECK(cd.components.size() == 4);
    std::vector<std::size_t> dom(e.dom.begin(), e.dom.end());
    CHECK(cd.classes == Partition::from_labels(dom));
    CHECK(isomorphic(cd.quotient, zoo::powerset_nilsemigroup(2)) == false);
    CHECK(is_semilattice(cd.quotient));
  }

  TEST_CASE("canonical_phi on a two component extension", "[extend][clifford]") {
    // A, A^2 over the top group of clifford_3: A -> g, A^2 -> e.
    auto const C   = zoo::clifford_3();
    auto const T   = nil3();
    auto const phi = validate_partial_hom(T, C, {1, 0, 0});
    auto const w   = build_extension(phi);
    auto const cd  = clifford_decompose(w.sigma, w.ideal);
    auto const psi = canonical_phi(w.sigma, parts_of(cd));
    CHECK(build_extension(psi).sigma == ideal_first(w.sigma, w.ideal));
    CHECK(psi.map() == phi.map());
  }

  TEST_CASE("clifford_decompose and canonical_phi errors", "[extend][clifford]") {
    auto const Z4 = zoo::zero_semigroup(4);
    CHECK(kind_of([&] { clifford_decompose(Z4, set(Z4, {0, 1, 2})); })
          == ErrorKind::not_clifford);
    auto const L1 = adjoin_identity(zoo::left_zero(2));
    CHECK(kind_of([&] { clifford_decompose(L1, set(L1, {0})); }) == ErrorKind::not_an_ideal);
    // An identity over a Clifford semigroup that has none acts as no
    // element of it.
    auto const Y1 = adjoin_identity(zoo::antichain_with_bottom(2));
    CHECK(kind_of([&] { clifford_decompose(Y1, set(Y1, {0, 1, 2})); })
          == ErrorKind::not_strict);

    auto const w  = build_extension(zoo::clifford_extension_4());
    auto const cd = clifford_decompose(w.sigma, w.ideal);
    auto       parts = parts_of(cd);

    // Groups {g, e} and {f} swapped into the wrong parts.
    auto broken     = parts;
    broken[0].group = parts[1].group;
    CHECK(kind_of([&] { canonical_phi(w.sigma, broken); }) == ErrorKind::invalid_parameter);

    // A chain Y with the identity on top of N2-over-trivial: the group
    // union {e} is not an ideal of Σ.
    auto const S = zoo::absorption_sum(zoo::cyclic_group(1), n2());
    // Elements r, 0, a: parts {r} over {r} and {0, a} over {0}.
    std::vector<GroupExtensionPart> bad{{set(S, {0}), set(S, {0})},
                                        {set(S, {1, 2}), set(S, {1})}};
    CHECK(kind_of([&] { canonical_phi(S, bad); }) == ErrorKind::group_union_not_ideal);
  }

  TEST_CASE("stratified T gives stratified components", "[extend][clifford][property]") {
    Rng rng(default_seed + 3);
    for (int i = 0; i < 60; ++i) {
      auto const phi = zoo::random_partial_hom(rng);
      auto const w   = build_extension(phi);
      auto const cd  = clifford_decompose(w.sigma, w.ideal);
      CHECK(isomorphic(cd.quotient,
                       subsemigroup(phi.target(), idempotents(phi.target())).semigroup));
      if (is_grillet_stratified(phi.source())) {
        for (auto const& c : cd.components) {
          CHECK(c.quotient_grillet_stratified);
        }
      }
      // psi lives on Σ / S, whose nonzero elements are the Σ elements off
      // the ideal in order.
      auto const        psi = canonical_phi(w.sigma, parts_of(cd));
      std::size_t const ns  = phi.target().size();
      for (element_index A = 0; A < phi.source().size(); ++A) {
        if (phi(A) != no_element) {
          CHECK(psi(w.sigma_of_t[A] - static_cast<element_index>(ns)) == phi(A));
        }
      }
      CHECK(build_extension(psi).sigma == ideal_first(w.sigma, w.ideal));
    }
  }

}  // namespace strata
