// Analysis bundles and their JSON and text renderings.

#ifndef STRATA_REPORT_HPP_
#define STRATA_REPORT_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include <nlohmann/json.hpp>  // for json

#include "decompose.hpp"  // for DecompositionReport
#include "element_set.hpp"  // for ElementSet
#include "partition.hpp"  // for Partition
#include "semigroup.hpp"  // for Semigroup
#include "stratify.hpp"   // for StratificationReport
#include "verify.hpp"     // for Report

namespace strata {

  inline constexpr char const* schema_version = "1.0";

  struct GreenSummary {
    Partition R, L, H, D, J;
    // (a, b) for J-classes a != b with J_a <= J_b.
    std::vector<std::pair<std::size_t, std::size_t>> j_order;
    ElementSet                                       idempotents;
    ElementSet                                       regular;
    bool                                             e_dense           = false;
    bool                                             group_bound       = false;
    bool                                             ccr               = false;
    std::optional<ElementSet>                        ccr_witness;
    bool                                             completely_simple = false;
    bool                                             clifford          = false;

    friend bool operator==(GreenSummary const&, GreenSummary const&) = default;
  };

  struct ClassificationSummary {
    bool        commutative               = false;
    bool        band                      = false;
    bool        semilattice               = false;
    bool        group                     = false;
    bool        weakly_reductive          = false;
    bool        nil_stratified            = false;
    std::size_t quotient_nilpotency_index = 0;

    friend bool operator==(ClassificationSummary const&, ClassificationSummary const&)
        = default;
  };

  struct AnalysisBundle {
    Semigroup                          semigroup;
    GreenSummary                       green;
    StratificationReport               stratification;
    ClassificationSummary              classification;
    std::optional<DecompositionReport> decomposition;  // when S is CCR
  };

  AnalysisBundle analyze(Semigroup const& S);

  bool operator==(StratificationReport const& a, StratificationReport const& b);
  bool operator==(Component const& a, Component const& b);
  bool operator==(DecompositionReport const& a, DecompositionReport const& b);
  bool operator==(AnalysisBundle const& a, AnalysisBundle const& b);

  nlohmann::json to_json(Semigroup const& S);
  nlohmann::json to_json(StratificationReport const& R);
  nlohmann::json to_json(DecompositionReport const& R);
  nlohmann::json to_json(AnalysisBundle const& B);
  nlohmann::json to_json(verify::Report const& R);

  // Inverses of to_json. Throw Error(parse) on missing or mistyped fields.
  Semigroup            semigroup_from_json(nlohmann::json const& j);
  StratificationReport stratification_from_json(nlohmann::json const& j);
  DecompositionReport  decomposition_from_json(nlohmann::json const& j);
  AnalysisBundle       bundle_from_json(nlohmann::json const& j);

  // One grid per D-class: rows are R-classes, columns L-classes, cells list
  // the H-class members with idempotents starred.
  std::string render_egg_box(Semigroup const& S, GreenSummary const& G);

  // The semilattice S / rho drawn level by level, top first.
  std::string render_hasse(DecompositionReport const& R);

  std::string render_text(AnalysisBundle const& B);
  std::string render_text(Semigroup const& S, DecompositionReport const& R);

}  // namespace strata

#endif  // STRATA_REPORT_HPP_
