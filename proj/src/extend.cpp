#include "strata/extend.hpp"

#include <string>   // for to_string
#include <utility>  // for move

#include "strata/core.hpp"      // for rees_quotient, subsemigroup
#include "strata/error.hpp"     // for Error, InternalError
#include "strata/green.hpp"     // for is_clifford, GreenStructure
#include "strata/stratify.hpp"  // for is_grillet_stratified

namespace strata {

  PartialHom validate_partial_hom(Semigroup T, Semigroup S,
                                  std::vector<element_index> map) {
    auto const zero = T.zero();
    if (!zero) {
      throw Error(ErrorKind::no_zero_in_source,
                  "the source of a partial homomorphism needs a zero");
    }
    if (map.size() != T.size()) {
      throw Error(ErrorKind::map_incomplete,
                  "expected " + std::to_string(T.size()) + " map entries, got "
                      + std::to_string(map.size()));
    }
    map[*zero] = no_element;
    for (element_index A = 0; A < T.size(); ++A) {
      if (A == *zero) {
        continue;
      }
      if (map[A] == no_element) {
        throw Error(ErrorKind::map_incomplete,
                    "no image for nonzero element " + std::to_string(A), {A});
      }
      if (map[A] >= S.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "image of " + std::to_string(A) + " is not an element of the target",
                    {A, map[A]});
      }
    }
    for (element_index A = 0; A < T.size(); ++A) {
      for (element_index B = 0; B < T.size(); ++B) {
        if (A == *zero || B == *zero) {
          continue;
        }
        auto const AB = T(A, B);
        if (AB != *zero && map[AB] != S(map[A], map[B])) {
          throw Error(ErrorKind::law_violation,
                      "image of " + std::to_string(A) + " * " + std::to_string(B)
                          + " is not the product of the images",
                      {A, B});
        }
      }
    }
    return PartialHom(std::move(T), std::move(S), std::move(map));
  }

  ExtensionWitness build_extension(PartialHom const& phi) {
    auto const&       T    = phi.source();
    auto const&       S    = phi.target();
    auto const        zero = *T.zero();
    std::size_t const ns = S.size(), nt = T.size(), n = ns + nt - 1;

    ExtensionWitness w{S, ElementSet(n), T, S, {}, {}, {}, {}};
    w.t_of_sigma.assign(n, no_element);
    w.s_of_sigma.assign(n, no_element);
    w.sigma_of_t.assign(nt, no_element);
    w.sigma_of_s.resize(ns);
    for (element_index s = 0; s < ns; ++s) {
      w.ideal.insert(s);
      w.s_of_sigma[s] = s;
      w.sigma_of_s[s] = s;
    }
    element_index next = static_cast<element_index>(ns);
    for (element_index A = 0; A < nt; ++A) {
      if (A != zero) {
        w.t_of_sigma[next] = A;
        w.sigma_of_t[A]    = next++;
      }
    }

    // Every element's image in S: itself on the ideal, Ā off it.
    std::vector<element_index> bar(n);
    for (element_index x = 0; x < n; ++x) {
      bar[x] = x < ns ? x : phi(w.t_of_sigma[x]);
    }
    std::vector<element_index> table(n * n);
    for (element_index x = 0; x < n; ++x) {
      for (element_index y = 0; y < n; ++y) {
        element_index v;
        if (x >= ns && y >= ns) {
          auto const AB = T(w.t_of_sigma[x], w.t_of_sigma[y]);
          v = AB != zero ? w.sigma_of_t[AB] : S(bar[x], bar[y]);
        } else {
          v = S(bar[x], bar[y]);
        }
        table[x * n + y] = v;
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels() || T.has_labels()) {
      for (element_index x = 0; x < n; ++x) {
        labels.push_back(x < ns ? S.label(x) : T.label(w.t_of_sigma[x]));
      }
    }
    try {
      w.sigma = Semigroup::from_flat(n, std::move(table), std::move(labels));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::non_associative) {
        throw InternalError(std::string("extension is not associative: ") + e.what());
      }
      throw;
    }
    return w;
  }

  char const* to_string(ExtensionKind kind) noexcept {
    switch (kind) {
      case ExtensionKind::strict:
        return "strict";
      case ExtensionKind::pure:
        return "pure";
      case ExtensionKind::mixed:
        return "mixed";
    }
    return "unknown";
  }

  ExtensionClassification classify_extension(Semigroup const& sigma,
                                             ElementSet const& ideal) {
    if (!is_ideal(sigma, ideal)) {
      throw Error(ErrorKind::not_an_ideal, ideal.to_string() + " is not an ideal of sigma");
    }
    std::vector<std::optional<element_index>> acting_as(sigma.size());
    std::size_t                               outside = 0, matched = 0;
    for (element_index x = 0; x < sigma.size(); ++x) {
      if (ideal.contains(x)) {
        acting_as[x] = x;
        continue;
      }
      ++outside;
      for (auto s : ideal) {
        bool same = true;
        for (auto y : ideal) {
          if (sigma(x, y) != sigma(s, y) || sigma(y, x) != sigma(y, s)) {
            same = false;
            break;
          }
        }
        if (same) {
          acting_as[x] = s;
          ++matched;
          break;
        }
      }
    }
    ExtensionKind kind = matched == outside ? ExtensionKind::strict
                         : matched == 0     ? ExtensionKind::pure
                                            : ExtensionKind::mixed;
    return {kind, std::move(acting_as)};
  }

  RecoveredExtension recover_partial_hom(Semigroup const& sigma, ElementSet const& ideal) {
    if (!is_ideal(sigma, ideal)) {
      throw Error(ErrorKind::not_an_ideal, ideal.to_string() + " is not an ideal of sigma");
    }
    auto sub = subsemigroup(sigma, ideal);
    if (auto pair = interchangeable_pair(sub.semigroup)) {
      auto a = sub.embedding[pair->first], b = sub.embedding[pair->second];
      throw Error(ErrorKind::not_weakly_reductive,
                  "ideal elements " + std::to_string(a) + " and " + std::to_string(b)
                      + " are interchangeable",
                  {a, b});
    }
    auto cls = classify_extension(sigma, ideal);
    for (element_index x = 0; x < sigma.size(); ++x) {
      if (!cls.acting_as[x]) {
        throw Error(ErrorKind::not_strict,
                    std::to_string(x) + " acts on the ideal like no ideal element", {x});
      }
    }

    auto quotient = rees_quotient(sigma, ideal);
    std::size_t const n = sigma.size(), nt = quotient.semigroup.size();

    std::vector<element_index> s_index(n, no_element);
    for (std::size_t k = 0; k < sub.embedding.size(); ++k) {
      s_index[sub.embedding[k]] = static_cast<element_index>(k);
    }

    ExtensionWitness w{sigma, ideal, quotient.semigroup, sub.semigroup, {}, {}, {}, {}};
    w.t_of_sigma.assign(n, no_element);
    w.sigma_of_t.assign(nt, no_element);
    w.s_of_sigma = s_index;
    w.sigma_of_s = sub.embedding;

    std::vector<element_index> map(nt, no_element);
    for (element_index x = 0; x < n; ++x) {
      if (!ideal.contains(x)) {
        auto A          = quotient.map[x];
        w.t_of_sigma[x] = A;
        w.sigma_of_t[A] = x;
        map[A]          = s_index[*cls.acting_as[x]];
      }
    }
    auto phi = validate_partial_hom(quotient.semigroup, sub.semigroup, std::move(map));
    return {std::move(phi), std::move(w)};
  }

  PartialHom recover_partial_hom(ExtensionWitness const& w) {
    auto const zero = w.t.zero();
    if (!zero) {
      throw Error(ErrorKind::no_zero_in_source, "witness T has no zero");
    }
    for (element_index A = 0; A < w.t.size(); ++A) {
      for (element_index B = 0; B < w.t.size(); ++B) {
        if (A == *zero || B == *zero) {
          continue;
        }
        auto const AB = w.t(A, B);
        auto const xy = w.sigma(w.sigma_of_t[A], w.sigma_of_t[B]);
        bool const ok = AB == *zero ? w.ideal.contains(xy) : xy == w.sigma_of_t[AB];
        if (!ok) {
          throw Error(ErrorKind::invalid_parameter,
                      "sigma / ideal does not match T under the witness map", {A, B});
        }
      }
    }
    auto recovered = recover_partial_hom(w.sigma, w.ideal);
    std::vector<element_index> map(w.t.size(), no_element);
    for (element_index A = 0; A < w.t.size(); ++A) {
      if (A == *zero) {
        continue;
      }
      auto const x  = w.sigma_of_t[A];
      auto const sx = recovered.witness.sigma_of_s[recovered.phi(recovered.witness.t_of_sigma[x])];
      map[A]        = w.s_of_sigma[sx];
    }
    return validate_partial_hom(w.t, w.s, std::move(map));
  }

  CliffordDecomposition clifford_decompose(Semigroup const& sigma, ElementSet const& ideal) {
    if (!is_ideal(sigma, ideal)) {
      throw Error(ErrorKind::not_an_ideal, ideal.to_string() + " is not an ideal of sigma");
    }
    auto const sub = subsemigroup(sigma, ideal);
    if (!is_clifford(sub.semigroup)) {
      throw Error(ErrorKind::not_clifford, "the ideal is not a Clifford semigroup");
    }
    auto const cls = classify_extension(sigma, ideal);
    if (cls.kind != ExtensionKind::strict) {
      throw Error(ErrorKind::not_strict, "the extension is not strict");
    }
    auto recovered = recover_partial_hom(sigma, ideal);

    std::size_t const n = sigma.size();
    // Ā in Σ indices, and x itself on the ideal.
    std::vector<element_index> bar(n);
    for (element_index x = 0; x < n; ++x) {
      bar[x] = *cls.acting_as[x];
    }

    GreenStructure const G(sub.semigroup);
    std::vector<std::size_t> label(n);
    for (element_index x = 0; x < n; ++x) {
      auto const s = recovered.witness.s_of_sigma[bar[x]];
      label[x]     = G.H().class_of(s);
    }
    auto classes = Partition::from_labels(label);
    if (auto bad = congruence_violation(sigma, classes)) {
      throw InternalError("the relation ~ is not a congruence at ("
                          + std::to_string((*bad)[0]) + ", " + std::to_string((*bad)[1])
                          + ", " + std::to_string((*bad)[2]) + ")");
    }
    auto quotient = quotient_by_congruence(sigma, classes).semigroup;
    if (!is_semilattice(quotient)) {
      throw InternalError("sigma / ~ is not a semilattice");
    }

    std::vector<CliffordComponent> components;
    std::vector<element_index>     class_of_idempotent;
    for (std::size_t k = 0; k < classes.number_of_classes(); ++k) {
      auto const extension = classes.class_set(k);
      auto const group     = extension & ideal;
      element_index e      = no_element;
      for (auto g : group) {
        if (sigma(g, g) == g) {
          e = g;
        }
      }
      if (e == no_element || !is_subgroup(sigma, group)) {
        throw InternalError("component " + extension.to_string()
                            + " does not contain a maximal subgroup of the ideal");
      }
      if (!is_subsemigroup(sigma, extension)) {
        throw InternalError("component " + extension.to_string() + " is not a subsemigroup");
      }
      auto const part = subsemigroup(sigma, extension);
      std::vector<element_index> local(n, no_element);
      for (std::size_t i = 0; i < part.embedding.size(); ++i) {
        local[part.embedding[i]] = static_cast<element_index>(i);
      }
      ElementSet local_group(part.semigroup.size());
      for (auto g : group) {
        local_group.insert(local[g]);
      }
      if (!is_ideal(part.semigroup, local_group)) {
        throw InternalError("G_alpha is not an ideal of its component");
      }
      auto t_alpha = rees_quotient(part.semigroup, local_group).semigroup;
      bool grillet = is_grillet_stratified(t_alpha);
      class_of_idempotent.push_back(e);
      components.push_back(
          CliffordComponent{e, group, extension, std::move(t_alpha), grillet});
    }

    // α ↦ [e_α] must be an isomorphism from the structure semilattice E(S)
    // onto Σ / ~.
    for (std::size_t a = 0; a < components.size(); ++a) {
      for (std::size_t b = 0; b < components.size(); ++b) {
        auto const ef = sigma(class_of_idempotent[a], class_of_idempotent[b]);
        if (classes.class_of(ef)
            != quotient(static_cast<element_index>(a), static_cast<element_index>(b))) {
          throw InternalError("sigma / ~ is not isomorphic to the structure semilattice");
        }
      }
    }
    return CliffordDecomposition{std::move(recovered.phi), std::move(classes),
                                 std::move(quotient), std::move(components)};
  }

  PartialHom canonical_phi(Semigroup const&                       sigma,
                           std::vector<GroupExtensionPart> const& parts) {
    std::size_t const       n = sigma.size();
    std::vector<ElementSet> classes;
    ElementSet              groups(n);
    for (auto const& p : parts) {
      if (!p.group.is_subset_of(p.extension) || !is_subgroup(sigma, p.group)) {
        throw Error(ErrorKind::invalid_parameter,
                    p.group.to_string() + " is not a subgroup inside its part");
      }
      classes.push_back(p.extension);
      groups |= p.group;
    }
    auto const partition = Partition::from_classes(n, classes);
    if (!is_congruence(sigma, partition)
        || !is_semilattice(quotient_by_congruence(sigma, partition).semigroup)) {
      throw Error(ErrorKind::invalid_parameter, "the parts do not form a semilattice");
    }
    if (!is_ideal(sigma, groups)) {
      throw Error(ErrorKind::group_union_not_ideal,
                  "the union of the groups " + groups.to_string() + " is not an ideal");
    }

    auto const quotient = rees_quotient(sigma, groups);
    auto const sub      = subsemigroup(sigma, groups);
    std::vector<element_index> s_index(n, no_element);
    for (std::size_t k = 0; k < sub.embedding.size(); ++k) {
      s_index[sub.embedding[k]] = static_cast<element_index>(k);
    }
    std::vector<element_index> map(quotient.semigroup.size(), no_element);
    for (auto const& p : parts) {
      element_index e = no_element;
      for (auto g : p.group) {
        if (sigma(g, g) == g) {
          e = g;
        }
      }
      for (auto A : p.extension - p.group) {
        map[quotient.map[A]] = s_index[sigma(A, e)];
      }
    }
    try {
      return validate_partial_hom(quotient.semigroup, sub.semigroup, std::move(map));
    } catch (Error const& e) {
      if (e.kind() == ErrorKind::law_violation) {
        throw InternalError(std::string("A -> A e_alpha is not a partial homomorphism: ")
                            + e.what());
      }
      throw;
    }
  }

  Semigroup ideal_first(Semigroup const& sigma, ElementSet const& ideal) {
    std::size_t const          n = sigma.size();
    std::vector<element_index> order;
    for (auto x : ideal) {
      order.push_back(x);
    }
    for (auto x : ideal.complement()) {
      order.push_back(x);
    }
    std::vector<element_index> position(n);
    for (std::size_t k = 0; k < n; ++k) {
      position[order[k]] = static_cast<element_index>(k);
    }
    std::vector<element_index> table(n * n);
    std::vector<std::string>   labels;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i * n + j] = position[sigma(order[i], order[j])];
      }
      if (sigma.has_labels()) {
        labels.push_back(sigma.label(order[i]));
      }
    }
    return Semigroup::from_flat(n, std::move(table), std::move(labels));
  }

}  // namespace strata
