#include "strata/stratify.hpp"

#include "strata/core.hpp"   // for PowerChain, rees_quotient, adjoin_zero
#include "strata/error.hpp"  // for InternalError
#include "strata/green.hpp"  // for regular_elements

namespace strata {

  StratificationReport stratify(Semigroup const& S) {
    PowerChain const     chain(S);
    StratificationReport report;
    report.height = chain.stable_index();
    report.base   = chain.stable_set();
    for (std::size_t m = 1; m < report.height; ++m) {
      report.layers.push_back(chain.power(m) - chain.power(m + 1));
    }
    report.depth_of.assign(S.size(), Depth::base());
    for (std::size_t m = 0; m < report.layers.size(); ++m) {
      for (auto s : report.layers[m]) {
        report.depth_of[s] = Depth::layer(m + 1);
      }
    }
    report.flags.grillet_stratified  = is_grillet_stratified(S);
    report.flags.globally_idempotent = report.height == 1;
    report.flags.base_equals_reg     = report.base == regular_elements(S);

    if (report.flags.globally_idempotent) {
      report.notes.emplace_back(
          "globally idempotent: the base is the whole semigroup and the height is 1");
    }
    if (report.flags.grillet_stratified && nilpotency_index(S)) {
      report.notes.emplace_back(
          "finite nilpotent semigroup: stratified with trivial base; infinite "
          "nilsemigroups need not be");
    }
    return report;
  }

  Depth depth(Semigroup const& S, element_index s) {
    PowerChain const chain(S);
    for (std::size_t m = 1; m < chain.stable_index(); ++m) {
      if (!chain.power(m + 1).contains(s)) {
        return Depth::layer(m);
      }
    }
    return Depth::base();
  }

  bool is_grillet_stratified(Semigroup const& S) {
    if (auto z = S.zero()) {
      return PowerChain(S).stable_set() == ElementSet(S.size(), {*z});
    }
    return is_grillet_stratified(adjoin_zero(S));
  }

  std::optional<std::size_t> nilpotency_index(Semigroup const& S) {
    auto z = S.zero();
    if (!z) {
      return std::nullopt;
    }
    PowerChain const chain(S);
    ElementSet const zero_only(S.size(), {*z});
    if (chain.stable_set() != zero_only) {
      return std::nullopt;
    }
    for (std::size_t m = 1; m <= chain.stable_index(); ++m) {
      if (chain.power(m) == zero_only) {
        return m;
      }
    }
    return chain.stable_index();
  }

  bool is_nil_stratified(Semigroup const& S, ElementSet const& base) {
    for (element_index s = 0; s < S.size(); ++s) {
      element_index p     = s;
      bool          found = false;
      for (std::size_t k = 1; k <= S.size() + 1 && !found; ++k) {
        found = base.contains(p);
        p     = S(p, s);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  Classification classify(Semigroup const& S) {
    PowerChain const chain(S);
    auto const&      base     = chain.stable_set();
    auto             quotient = rees_quotient(S, base);
    auto             index    = nilpotency_index(quotient.semigroup);
    if (!index) {
      throw InternalError("S / Base(S) is not nilpotent");
    }
    if (*index != chain.stable_index()) {
      throw InternalError("nilpotency index of S / Base(S) is " + std::to_string(*index)
                          + " but the height is "
                          + std::to_string(chain.stable_index()));
    }
    bool const nil = is_nil_stratified(S, base);
    if (!nil) {
      throw InternalError("finite semigroup with an element that has no power in the base");
    }
    return Classification{chain.stable_index(), nil, chain.stable_index() == 1,
                          std::move(quotient), *index};
  }

}  // namespace strata
