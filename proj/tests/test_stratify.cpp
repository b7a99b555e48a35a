#include <algorithm>  // for count

#include "catch_amalgamated.hpp"

#include "strata/core.hpp"
#include "strata/green.hpp"
#include "strata/stratify.hpp"
#include "strata/zoo.hpp"

#include "test_support.hpp"

namespace strata {
  using namespace test;

  TEST_CASE("stratify monogenic(3, 2)", "[stratify]") {
    auto const M = zoo::monogenic(3, 2);
    auto const R = stratify(M);
    CHECK(R.height == 3);
    CHECK(R.base == labelled(M, {"a^3", "a^4"}));
    REQUIRE(R.layers.size() == 2);
    CHECK(R.layers[0] == labelled(M, {"a"}));
    CHECK(R.layers[1] == labelled(M, {"a^2"}));
    CHECK_FALSE(R.flags.grillet_stratified);
    CHECK_FALSE(R.flags.globally_idempotent);
    CHECK(R.flags.base_equals_reg);
  }

  TEST_CASE("stratify groups and the powerset nilsemigroup", "[stratify]") {
    auto const Z = zoo::cyclic_group(2);
    auto const R = stratify(Z);
    CHECK(R.height == 1);
    CHECK(R.base == ElementSet::full(2));
    CHECK(R.layers.empty());
    CHECK(R.flags.globally_idempotent);

    auto const P  = zoo::powerset_nilsemigroup(2);
    auto const RP = stratify(P);
    CHECK(RP.base == labelled(P, {"{}"}));
    CHECK(RP.height == 3);
    REQUIRE(RP.layers.size() == 2);
    CHECK(RP.layers[0] == labelled(P, {"{1}", "{2}"}));
    CHECK(RP.layers[1] == labelled(P, {"{1,2}"}));
    CHECK(RP.flags.grillet_stratified);
  }

  TEST_CASE("powerset nilsemigroup layers follow subset size", "[stratify][zoo]") {
    // S^m = {A : |A| >= m} ∪ {∅}, so the height is k + 1.
    for (std::size_t k = 1; k <= 4; ++k) {
      auto const P = zoo::powerset_nilsemigroup(k);
      auto const R = stratify(P);
      CHECK(R.height == k + 1);
      CHECK(is_grillet_stratified(P));
      for (std::size_t m = 1; m <= k; ++m) {
        for (auto x : R.layers[m - 1]) {
          auto const l = P.label(x);
          CHECK(static_cast<std::size_t>(std::count(l.begin(), l.end(), ',')) + 1 == m);
        }
      }
    }
  }

  TEST_CASE("is_grillet_stratified", "[stratify]") {
    CHECK(is_grillet_stratified(zoo::named_fixture("null", {})));
    CHECK_FALSE(is_grillet_stratified(zoo::monogenic(3, 2)));
    CHECK_FALSE(is_grillet_stratified(zoo::cyclic_group(3)));
    CHECK(is_grillet_stratified(zoo::free_nilpotent(2, 3)));
  }

  TEST_CASE("depth", "[stratify]") {
    auto const M = zoo::monogenic(3, 2);
    CHECK(depth(M, at(M, "a")) == Depth::layer(1));
    CHECK(depth(M, at(M, "a^2")) == Depth::layer(2));
    CHECK(depth(M, at(M, "a^3")).in_base());
    auto const Z = zoo::cyclic_group(3);
    for (element_index x = 0; x < 3; ++x) {
      CHECK(depth(Z, x).in_base());
    }
    auto const N = zoo::named_fixture("null", {});
    CHECK(depth(N, 1) == Depth::layer(1));
    CHECK(depth(N, 1).layer_index() == 1);
  }

  TEST_CASE("classify", "[stratify]") {
    auto const c = classify(zoo::monogenic(3, 2));
    CHECK(c.height == 3);
    CHECK(c.quotient_nilpotency_index == 3);
    CHECK(c.nil_stratified);
    CHECK(nilpotency_index(c.base_quotient.semigroup) == std::size_t{3});

    auto const cz = classify(zoo::cyclic_group(2));
    CHECK(cz.base_quotient.semigroup.size() == 1);
    CHECK(cz.quotient_nilpotency_index == 1);
    CHECK(cz.globally_idempotent);

    auto const N  = zoo::named_fixture("null", {});
    auto const cn = classify(direct_product(N, N));
    CHECK(cn.height == 2);
    CHECK(cn.quotient_nilpotency_index == 2);
  }

  TEST_CASE("nilpotency_index", "[stratify]") {
    CHECK(nilpotency_index(zoo::named_fixture("null", {})) == std::size_t{2});
    CHECK(nilpotency_index(zoo::free_nilpotent(2, 3)) == std::size_t{3});
    CHECK_FALSE(nilpotency_index(zoo::cyclic_group(2)));
    CHECK_FALSE(nilpotency_index(zoo::chain(2)));
  }

  TEST_CASE("stratification invariants over small orders", "[stratify][property]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& S : zoo::enumerate_associative(n)) {
        auto const R = stratify(S);
        REQUIRE(R.base == oracle::base(S));
        CHECK_FALSE(R.base.empty());
        CHECK(R.base == power_set(S, R.height));
        CHECK(R.base == power_set(S, R.height + 1));
        CHECK(R.height <= n);

        // Layers and base partition S.
        ElementSet all = R.base;
        for (auto const& layer : R.layers) {
          CHECK_FALSE(layer.intersects(all));
          all |= layer;
        }
        CHECK(all == ElementSet::full(n));

        GreenStructure const G(S);
        auto const           reg = regular_elements(S);
        auto const           E   = idempotents(S);
        CHECK(reg.is_subset_of(R.base));
        CHECK(E.is_subset_of(R.base));
        CHECK(is_ideal(S, R.base));
        CHECK(is_globally_idempotent(subsemigroup(S, R.base).semigroup));
        CHECK(is_grillet_stratified(rees_quotient(S, R.base).semigroup));
        CHECK(is_nil_stratified(S, R.base));

        for (element_index s = 0; s < n; ++s) {
          CHECK(depth(S, s) == R.depth_of[s]);
          // s ∈ Ss ∪ sS ∪ SsS implies s ∈ Base(S).
          bool divisible = false;
          for (element_index u = 0; u < n && !divisible; ++u) {
            divisible = S(u, s) == s || S(s, u) == s;
            for (element_index v = 0; v < n && !divisible; ++v) {
              divisible = S(S(u, s), v) == s;
            }
          }
          if (divisible) {
            CHECK(R.base.contains(s));
          }
          if (!R.base.contains(s)) {
            CHECK(G.J().members(G.J().class_of(s)).size() == 1);
          }
        }
      }
    }
  }

  TEST_CASE("base of a finitely stratified extension is globally idempotent",
            "[stratify][property]") {
    for (std::size_t h = 1; h <= 6; ++h) {
      for (std::size_t r = 1; r <= 6; ++r) {
        auto const S = zoo::monogenic(h, r);
        auto const R = stratify(S);
        CHECK(R.height == h);
        CHECK(R.base.size() == r);
        CHECK(is_globally_idempotent(subsemigroup(S, R.base).semigroup));
      }
    }
  }

  TEST_CASE("base_equals_reg when Reg(S) is completely simple", "[stratify][property]") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& S : zoo::enumerate_associative(n)) {
        auto const reg = regular_elements(S);
        if (is_subsemigroup(S, reg) && is_completely_simple(S, reg)) {
          CHECK(stratify(S).flags.base_equals_reg);
        }
      }
    }
  }

}  // namespace strata
