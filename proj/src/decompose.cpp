#include "strata/decompose.hpp"

#include <map>     // for map
#include <string>  // for to_string

#include "strata/core.hpp"      // for quotient_by_congruence, subsemigroup
#include "strata/error.hpp"     // for Error, InternalError
#include "strata/stratify.hpp"  // for PowerChain

namespace strata {

  namespace {
    std::vector<std::size_t> to_witness(ElementSet const& A) {
      std::vector<std::size_t> out;
      for (auto x : A) {
        out.push_back(x);
      }
      return out;
    }

    void require_ccr(Semigroup const& S, GreenStructure const& G) {
      if (auto bad = ccr_witness(S, G)) {
        throw Error(ErrorKind::not_conditionally_completely_regular,
                    "the H-class " + bad->to_string()
                        + " contains a regular element but no idempotent",
                    to_witness(*bad));
      }
    }

    Partition group_by_key(std::vector<ElementSet> const& keys) {
      std::map<ElementSet, std::size_t> ids;
      std::vector<std::size_t>          labels(keys.size());
      for (std::size_t x = 0; x < keys.size(); ++x) {
        labels[x] = ids.emplace(keys[x], ids.size()).first->second;
      }
      return Partition::from_labels(labels);
    }
  }  // namespace

  ElementSet footprint(Semigroup const& S, GreenStructure const& G, element_index s) {
    ElementSet result(G.D().number_of_classes());
    for (auto w : weak_inverses(S, s)) {
      result.insert(static_cast<element_index>(G.D().class_of(w)));
    }
    return result;
  }

  Partition rho_partition(Semigroup const& S, GreenStructure const& G) {
    require_ccr(S, G);
    std::vector<ElementSet> keys;
    keys.reserve(S.size());
    for (element_index s = 0; s < S.size(); ++s) {
      keys.push_back(footprint(S, G, s));
    }
    return group_by_key(keys);
  }

  Partition rho_partition(Semigroup const& S) {
    return rho_partition(S, GreenStructure(S));
  }

  Partition rho_partition_by_h_classes(Semigroup const& S, GreenStructure const& G) {
    std::vector<ElementSet> keys;
    keys.reserve(S.size());
    for (element_index s = 0; s < S.size(); ++s) {
      ElementSet key(G.H().number_of_classes());
      for (auto w : weak_inverses(S, s)) {
        key.insert(static_cast<element_index>(G.H().class_of(w)));
      }
      keys.push_back(std::move(key));
    }
    return group_by_key(keys);
  }

  bool archimedean(Semigroup const& S, ElementSet const& A) {
    if (!is_subsemigroup(S, A)) {
      throw Error(ErrorKind::not_a_subsemigroup,
                  A.to_string() + " is not closed under multiplication");
    }
    for (auto b : A) {
      ElementSet single(S.size(), {b});
      auto       left  = product_set(S, A, single);
      auto       ideal = single | left | product_set(S, single, A) | product_set(S, left, A);
      for (auto a : A) {
        element_index p     = a;
        bool          found = false;
        for (std::size_t k = 1; k <= A.size() + 1 && !found; ++k) {
          found = ideal.contains(p);
          p     = S(p, a);
        }
        if (!found) {
          return false;
        }
      }
    }
    return true;
  }

  DecompositionReport verify_rho(Semigroup const& S) {
    GreenStructure const G(S);
    Partition            rho = rho_partition(S, G);
    if (auto bad = congruence_violation(S, rho)) {
      throw InternalError("rho is not a congruence: witness ("
                          + std::to_string((*bad)[0]) + ", " + std::to_string((*bad)[1])
                          + ", " + std::to_string((*bad)[2]) + ")");
    }
    auto quotient = quotient_by_congruence(S, rho).semigroup;
    if (!is_semilattice(quotient)) {
      throw InternalError("S / rho is not a semilattice");
    }

    auto const             reg = regular_elements(S);
    std::vector<Component> components;
    for (std::size_t k = 0; k < rho.number_of_classes(); ++k) {
      Component c;
      c.elements     = rho.class_set(k);
      c.regular_part = c.elements & reg;
      if (!is_subsemigroup(S, c.elements)) {
        throw InternalError("rho-class " + c.elements.to_string()
                            + " is not a subsemigroup");
      }
      auto const       sub = subsemigroup(S, c.elements);
      PowerChain const chain(sub.semigroup);
      c.height = chain.stable_index();
      c.base   = image(sub.embedding, chain.stable_set(), S.size());
      c.finitely_stratified
          = chain.power(c.height) == chain.power(c.height + 1);
      c.is_archimedean         = archimedean(S, c.elements);
      c.is_e_dense             = is_e_dense(sub.semigroup);
      c.completely_simple_base = is_completely_simple(sub.semigroup, chain.stable_set());

      if (!c.regular_part.empty()) {
        auto const d = G.D().class_of(c.regular_part.first());
        if (G.D().class_set(d) != c.regular_part) {
          throw InternalError("regular part " + c.regular_part.to_string()
                              + " of a rho-class is not a single D-class");
        }
        if (!is_completely_simple(S, c.regular_part)) {
          throw InternalError("regular part " + c.regular_part.to_string()
                              + " is not completely simple");
        }
      }
      components.push_back(std::move(c));
    }
    return DecompositionReport{std::move(rho), std::move(quotient), std::move(components)};
  }

  Partition kje_partition(Semigroup const& S, GreenStructure const& G) {
    if (!is_group_bound(S, G)) {
      throw Error(ErrorKind::not_group_bound, "K_{J_e} needs a group-bound semigroup");
    }
    require_ccr(S, G);
    std::map<std::size_t, ElementSet> by_j;
    for (auto e : idempotents(S)) {
      auto  j   = G.J().class_of(e);
      auto& acc = by_j.try_emplace(j, ElementSet(S.size())).first->second;
      acc |= k_class(S, G, e);
    }
    std::vector<ElementSet> classes;
    for (auto& [j, set] : by_j) {
      classes.push_back(std::move(set));
    }
    try {
      return Partition::from_classes(S.size(), classes);
    } catch (Error const& e) {
      throw InternalError(std::string("the sets K_{J_e} do not partition S: ") + e.what());
    }
  }

  Partition kje_partition(Semigroup const& S) {
    return kje_partition(S, GreenStructure(S));
  }

  std::vector<bool> weak_inverse_location(Semigroup const&           S,
                                          DecompositionReport const& report,
                                          element_index              s) {
    auto const        W = weak_inverses(S, s);
    std::vector<bool> out;
    for (auto const& c : report.components) {
      out.push_back(W.intersects(c.elements));
    }
    return out;
  }

}  // namespace strata
