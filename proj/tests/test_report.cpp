#include <string>  // for string

#include "catch_amalgamated.hpp"

#include "strata/decompose.hpp"
#include "strata/report.hpp"
#include "strata/zoo.hpp"

#include "test_support.hpp"

namespace strata {
  using namespace test;
  using nlohmann::json;

  namespace {
    bool contains(std::string const& haystack, std::string const& needle) {
      return haystack.find(needle) != std::string::npos;
    }
  }  // namespace

  TEST_CASE("analyze", "[report]") {
    auto const M = zoo::monogenic(3, 2);
    auto const B = analyze(M);
    CHECK(B.stratification.height == 3);
    CHECK(B.green.ccr);
    CHECK_FALSE(B.green.ccr_witness);
    REQUIRE(B.decomposition);
    CHECK(B.decomposition->components.size() == 1);
    CHECK(B.classification.commutative);
    CHECK(B.classification.quotient_nilpotency_index == 3);
    // J_a > J_{a^2} > J_{a^3}.
    CHECK(B.green.j_order.size() == 3);

    auto const BB = analyze(zoo::brandt_b2());
    CHECK_FALSE(BB.green.ccr);
    REQUIRE(BB.green.ccr_witness);
    CHECK_FALSE(BB.decomposition);
  }

  TEST_CASE("bundle JSON round trips", "[report][property]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& S : zoo::enumerate_associative(n)) {
        auto const B = analyze(S);
        REQUIRE(bundle_from_json(to_json(B)) == B);
      }
    }
    for (auto const& S : {zoo::brandt_b2(), zoo::full_transformation_2(), zoo::clifford_6(),
                          zoo::monogenic(3, 2), zoo::free_nilpotent(2, 3)}) {
      auto const B    = analyze(S);
      auto const text = to_json(B).dump();
      CHECK(bundle_from_json(json::parse(text)) == B);
    }
  }

  TEST_CASE("bundle JSON fields", "[report]") {
    auto const j = to_json(analyze(zoo::cyclic_group(2)));
    CHECK(j["schema_version"] == "1.0");
    CHECK(j["stratification"]["globally_idempotent"] == true);
    CHECK(j["stratification"]["depth"] == json::array({"base", "base"}));
    CHECK(j["semigroup"]["identity"] == 0);
    CHECK(j["semigroup"]["zero"].is_null());
    CHECK(j["green"]["ccr_witness"].is_null());

    auto const m = to_json(analyze(zoo::monogenic(3, 2)));
    CHECK(m["stratification"]["depth"] == json::array({1, 2, "base", "base"}));
    CHECK(m["stratification"]["layers"] == json::array({{0}, {1}}));

    auto const b = to_json(analyze(zoo::brandt_b2()));
    CHECK(b["decomposition"].is_null());
    CHECK(b["green"]["ccr_witness"].size() == 1);
  }

  TEST_CASE("component JSON round trips", "[report]") {
    auto const T = zoo::full_transformation_2();
    auto const R = verify_rho(T);
    CHECK(decomposition_from_json(to_json(R)) == R);
    auto const j = to_json(R);
    CHECK(j["components"].size() == 2);
    CHECK(j["quotient_order"].size() == 1);

    auto const S = stratify(zoo::powerset_nilsemigroup(3));
    CHECK(stratification_from_json(to_json(S)) == S);
    CHECK(semigroup_from_json(to_json(zoo::brandt_b2())).labels()
          == zoo::brandt_b2().labels());
  }

  TEST_CASE("JSON decoding errors", "[report]") {
    auto j = to_json(analyze(zoo::cyclic_group(2)));

    auto wrong_version              = j;
    wrong_version["schema_version"] = "0.9";
    CHECK(kind_of([&] { bundle_from_json(wrong_version); }) == ErrorKind::parse);

    auto missing = j;
    missing.erase("green");
    CHECK(kind_of([&] { bundle_from_json(missing); }) == ErrorKind::parse);

    auto mistyped                      = j;
    mistyped["stratification"]["base"] = "all";
    CHECK(kind_of([&] { bundle_from_json(mistyped); }) == ErrorKind::parse);

    auto out_of_range                      = j;
    out_of_range["stratification"]["base"] = json::array({0, 7});
    CHECK(kind_of([&] { bundle_from_json(out_of_range); }) == ErrorKind::parse);

    json bad_table = {{"order", 2}, {"table", {{0, 1}, {0, 0}}}};
    CHECK(kind_of([&] { semigroup_from_json(bad_table); }) == ErrorKind::parse);
    json non_assoc = {{"order", 2},        {"table", {{1, 0}, {0, 0}}}, {"labels", nullptr},
                      {"zero", nullptr},   {"identity", nullptr}};
    CHECK(kind_of([&] { semigroup_from_json(non_assoc); }) == ErrorKind::non_associative);
  }

  TEST_CASE("text rendering", "[report]") {
    auto const m = render_text(analyze(zoo::monogenic(3, 2)));
    CHECK(contains(m, "height: 3"));
    CHECK(contains(m, "base: {a^3, a^4}"));
    CHECK(contains(m, "layer 2: {a^2}"));
    CHECK(contains(m, "a^4*"));

    auto const z = render_text(analyze(zoo::cyclic_group(2)));
    CHECK(contains(z, "globally_idempotent: true"));

    auto const b = render_text(analyze(zoo::brandt_b2()));
    CHECK(contains(b, "conditionally completely regular: false (witness H-class {(1,2)})"));
    CHECK_FALSE(contains(b, "rho-classes"));

    auto const T = zoo::full_transformation_2();
    auto const t = render_text(T, verify_rho(T));
    CHECK(contains(t, "rho-classes: 2"));
    CHECK(contains(t, "0 > 1"));
  }

  TEST_CASE("egg-box diagram", "[report]") {
    auto const B   = analyze(zoo::brandt_b2());
    auto const box = render_egg_box(B.semigroup, B.green);
    CHECK(contains(box, "| (1,1)* | (1,2)  |"));
    CHECK(contains(box, "| (2,1)  | (2,2)* |"));
  }

  TEST_CASE("verify report JSON", "[report][verify]") {
    verify::Report r;
    r.stats.tables = 3;
    r.violations.push_back({2, {0, 0, 0, 0}, "green", "prop", "detail"});
    auto const j = to_json(r);
    CHECK(j["schema_version"] == "1.0");
    CHECK(j["ok"] == false);
    CHECK(j["stats"]["tables"] == 3);
    CHECK(j["violations"][0]["order"] == 2);
    CHECK(j["violations"][0]["table"] == json::array({0, 0, 0, 0}));
  }

}  // namespace strata
