#include "catch_amalgamated.hpp"

#include "strata/core.hpp"
#include "strata/decompose.hpp"
#include "strata/green.hpp"
#include "strata/zoo.hpp"

#include "test_support.hpp"

namespace strata {
  using namespace test;

  TEST_CASE("rho_partition of fixtures", "[decompose][rho]") {
    auto const T = zoo::full_transformation_2();
    auto const p = rho_partition(T);
    CHECK(p.number_of_classes() == 2);
    CHECK(p.same_class(at(T, "id"), at(T, "swap")));
    CHECK(p.same_class(at(T, "c1"), at(T, "c2")));
    CHECK_FALSE(p.same_class(at(T, "id"), at(T, "c1")));

    CHECK(rho_partition(zoo::cyclic_group(4)).number_of_classes() == 1);
    CHECK(rho_partition(zoo::monogenic(3, 2)).number_of_classes() == 1);
  }

  TEST_CASE("rho_partition rejects B2 with a witness H-class", "[decompose][rho]") {
    auto const B = zoo::brandt_b2();
    CHECK(kind_of([&] { rho_partition(B); })
          == ErrorKind::not_conditionally_completely_regular);
    auto const w = witness_of([&] { rho_partition(B); });
    REQUIRE(w.size() == 1);
    GreenStructure const G(B);
    auto const           h = G.H().class_set(G.H().class_of(static_cast<element_index>(w[0])));
    CHECK(h.is_subset_of(regular_elements(B)));
    CHECK_FALSE(h.intersects(idempotents(B)));
  }

  TEST_CASE("verify_rho", "[decompose]") {
    auto const T = zoo::full_transformation_2();
    auto const R = verify_rho(T);
    CHECK(R.components.size() == 2);
    CHECK(isomorphic(R.quotient, zoo::chain(2)));
    auto const top = R.rho.class_of(at(T, "id"));
    auto const bot = R.rho.class_of(at(T, "c1"));
    CHECK(R.leq(bot, top));
    CHECK_FALSE(R.leq(top, bot));
    for (auto const& c : R.components) {
      CHECK(c.is_archimedean);
      CHECK(c.is_e_dense);
      CHECK(c.completely_simple_base);
      CHECK(c.finitely_stratified);
      CHECK(c.base == c.regular_part);
      CHECK(c.height == 1);
    }

    CHECK(verify_rho(zoo::cyclic_group(3)).quotient.size() == 1);

    auto const C  = zoo::clifford_3();
    auto const RC = verify_rho(C);
    CHECK(isomorphic(RC.quotient, zoo::chain(2)));

    auto const C6 = zoo::clifford_6();
    auto const R6 = verify_rho(C6);
    CHECK(R6.components.size() == 3);
    CHECK(isomorphic(R6.quotient, zoo::antichain_with_bottom(2)));

    auto const M  = zoo::monogenic(3, 2);
    auto const RM = verify_rho(M);
    REQUIRE(RM.components.size() == 1);
    CHECK(RM.components[0].height == 3);
    CHECK(RM.components[0].base == labelled(M, {"a^3", "a^4"}));
  }

  TEST_CASE("kje_partition", "[decompose]") {
    auto const T = zoo::full_transformation_2();
    CHECK(kje_partition(T) == rho_partition(T));
    CHECK(kje_partition(zoo::monogenic(3, 2)).number_of_classes() == 1);
    CHECK(kje_partition(zoo::cyclic_group(3)).number_of_classes() == 1);
    CHECK(kind_of([] { kje_partition(zoo::brandt_b2()); })
          == ErrorKind::not_conditionally_completely_regular);
  }

  TEST_CASE("archimedean", "[decompose]") {
    auto const Z = zoo::cyclic_group(3);
    CHECK(archimedean(Z, ElementSet::full(3)));
    auto const N = zoo::named_fixture("null", {});
    CHECK(archimedean(N, ElementSet::full(2)));
    auto const Y = zoo::chain(2);
    CHECK_FALSE(archimedean(Y, ElementSet::full(2)));
    auto const M = zoo::monogenic(3, 2);
    CHECK(kind_of([&] { archimedean(M, labelled(M, {"a"})); })
          == ErrorKind::not_a_subsemigroup);
  }

  TEST_CASE("weak_inverse_location", "[decompose]") {
    auto const T = zoo::full_transformation_2();
    auto const R = verify_rho(T);
    CHECK(weak_inverse_location(T, R, at(T, "id")) == std::vector<bool>{true, true});

    auto const Z  = zoo::cyclic_group(2);
    auto const RZ = verify_rho(Z);
    CHECK(weak_inverse_location(Z, RZ, 1) == std::vector<bool>{true});

    auto const M  = zoo::monogenic(3, 2);
    auto const RM = verify_rho(M);
    CHECK(weak_inverse_location(M, RM, at(M, "a")) == std::vector<bool>{true});
  }

  TEST_CASE("footprint", "[decompose]") {
    auto const           N = zoo::named_fixture("null", {});
    GreenStructure const G(N);
    // W(a) = {0}, which lies in the D-class of 0.
    auto const f = footprint(N, G, 1);
    CHECK(f.size() == 1);
    CHECK(f.contains(static_cast<element_index>(G.D().class_of(0))));
  }

  TEST_CASE("decomposition laws on CCR tables", "[decompose][property]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& S : zoo::enumerate_associative(n)) {
        if (!is_conditionally_completely_regular(S)) {
          continue;
        }
        GreenStructure const G(S);
        auto const           R   = verify_rho(S);
        auto const&          rho = R.rho;
        auto const           reg = regular_elements(S);

        REQUIRE(is_congruence(S, rho));
        CHECK(is_semilattice(R.quotient));
        CHECK(rho == rho_partition_by_h_classes(S, G));
        CHECK(rho == kje_partition(S, G));

        for (element_index s = 0; s < n; ++s) {
          CHECK(rho.same_class(s, S(s, s)));
          for (element_index t = 0; t < n; ++t) {
            CHECK(rho.same_class(S(s, t), S(t, s)));
            if (reg.contains(s) && reg.contains(t)) {
              CHECK(rho.same_class(s, t) == G.D().same_class(s, t));
            }
            // W(st) meets D iff both W(s) and W(t) do.
            auto const fs  = footprint(S, G, s);
            auto const ft  = footprint(S, G, t);
            auto const fst = footprint(S, G, S(s, t));
            CHECK(fst == (fs & ft));
          }
        }
        for (std::size_t k = 0; k < R.components.size(); ++k) {
          auto const& c = R.components[k];
          CHECK(c.is_e_dense == c.elements.intersects(reg));
          CHECK(c.is_archimedean);
          CHECK_FALSE(c.regular_part.empty());
          CHECK(c.finitely_stratified);
          CHECK(c.completely_simple_base);
          CHECK(c.base == c.regular_part);
        }
      }
    }
  }

  TEST_CASE("J_e is the greatest J-class meeting W(s) for s in K_e",
            "[decompose][property]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& S : zoo::enumerate_associative(n)) {
        GreenStructure const G(S);
        for (auto e : idempotents(S)) {
          for (auto s : k_class(S, G, e)) {
            for (auto x : weak_inverses(S, s)) {
              CHECK(G.j_leq(x, e));
            }
            CHECK(weak_inverses(S, s).intersects(G.J().class_set(G.J().class_of(e))));
          }
        }
      }
    }
  }

}  // namespace strata
