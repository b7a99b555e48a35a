#include "strata/green.hpp"

#include <map>     // for map
#include <string>  // for to_string

#include "strata/core.hpp"   // for product_set, subsemigroup
#include "strata/error.hpp"  // for Error, InternalError

namespace strata {

  namespace {
    Partition group_by(std::vector<ElementSet> const& keys) {
      std::map<ElementSet, std::size_t> ids;
      std::vector<std::size_t>          labels(keys.size());
      for (std::size_t x = 0; x < keys.size(); ++x) {
        labels[x] = ids.emplace(keys[x], ids.size()).first->second;
      }
      return Partition::from_labels(labels);
    }

    // { t : s P u Q t for some u }
    std::vector<ElementSet> compose(Partition const& P, Partition const& Q) {
      std::size_t const       n = P.universe_size();
      std::vector<ElementSet> out(n, ElementSet(n));
      for (element_index s = 0; s < n; ++s) {
        for (auto u : P.members(P.class_of(s))) {
          for (auto t : Q.members(Q.class_of(u))) {
            out[s].insert(t);
          }
        }
      }
      return out;
    }
  }  // namespace

  GreenStructure::GreenStructure(Semigroup const& S) {
    std::size_t const n     = S.size();
    auto const        whole = ElementSet::full(n);
    _right.reserve(n);
    _left.reserve(n);
    _ideal.reserve(n);
    for (element_index s = 0; s < n; ++s) {
      ElementSet single(n, {s});
      auto       right = product_set(S, single, whole);
      auto       left  = product_set(S, whole, single);
      right.insert(s);
      left.insert(s);
      _ideal.push_back(left | right | product_set(S, left, whole));
      _right.push_back(std::move(right));
      _left.push_back(std::move(left));
    }
    _R = group_by(_right);
    _L = group_by(_left);
    _J = group_by(_ideal);

    std::vector<std::size_t> h(n);
    for (element_index s = 0; s < n; ++s) {
      h[s] = _R.class_of(s) * n + _L.class_of(s);
    }
    _H = Partition::from_labels(h);

    auto rl = compose(_R, _L);
    auto lr = compose(_L, _R);
    if (rl != lr) {
      throw InternalError("R∘L differs from L∘R");
    }
    _D = group_by(rl);
    for (element_index s = 0; s < n; ++s) {
      if (_D.class_set(_D.class_of(s)) != rl[s]) {
        throw InternalError("R∘L is not an equivalence at " + std::to_string(s));
      }
    }
    if (!(_D == _J)) {
      throw InternalError("D != J on a finite semigroup");
    }
  }

  ElementSet idempotents(Semigroup const& S) {
    ElementSet result(S.size());
    for (element_index e = 0; e < S.size(); ++e) {
      if (S(e, e) == e) {
        result.insert(e);
      }
    }
    return result;
  }

  ElementSet regular_elements(Semigroup const& S) {
    ElementSet result(S.size());
    for (element_index s = 0; s < S.size(); ++s) {
      for (element_index x = 0; x < S.size(); ++x) {
        if (S(S(s, x), s) == s) {
          result.insert(s);
          break;
        }
      }
    }
    return result;
  }

  ElementSet weak_inverses(Semigroup const& S, element_index s) {
    ElementSet result(S.size());
    for (element_index x = 0; x < S.size(); ++x) {
      if (S(S(x, s), x) == x) {
        result.insert(x);
      }
    }
    return result;
  }

  ElementSet inverses(Semigroup const& S, element_index s) {
    ElementSet result(S.size());
    for (element_index x = 0; x < S.size(); ++x) {
      if (S(S(x, s), x) == x && S(S(s, x), s) == s) {
        result.insert(x);
      }
    }
    return result;
  }

  element_index idempotent_power(Semigroup const& S, element_index s) {
    element_index p = s;
    for (std::size_t k = 1; k <= S.size(); ++k) {
      if (S(p, p) == p) {
        return p;
      }
      p = S(p, s);
    }
    throw InternalError("no idempotent power of " + std::to_string(s)
                        + " within the order of the semigroup");
  }

  std::array<bool, 4> e_dense_characterizations(Semigroup const& S) {
    std::size_t const   n = S.size();
    auto const          E = idempotents(S);
    std::array<bool, 4> out{true, true, true, true};
    for (element_index s = 0; s < n; ++s) {
      bool right = false, left = false, both = false;
      for (element_index t = 0; t < n; ++t) {
        bool const st = E.contains(S(s, t)), ts = E.contains(S(t, s));
        right |= st;
        left |= ts;
        both |= st && ts;
      }
      out[0] = out[0] && right;
      out[1] = out[1] && left;
      out[2] = out[2] && both;
      out[3] = out[3] && !weak_inverses(S, s).empty();
    }
    return out;
  }

  bool is_e_dense(Semigroup const& S) {
    for (element_index s = 0; s < S.size(); ++s) {
      if (weak_inverses(S, s).empty()) {
        return false;
      }
    }
    return true;
  }

  bool is_periodic(Semigroup const& S) {
    for (element_index s = 0; s < S.size(); ++s) {
      element_index p     = s;
      bool          found = false;
      for (std::size_t k = 1; k <= S.size() && !found; ++k) {
        found = S(p, p) == p;
        p     = S(p, s);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_eventually_regular(Semigroup const& S) {
    auto const reg = regular_elements(S);
    for (element_index s = 0; s < S.size(); ++s) {
      element_index p     = s;
      bool          found = false;
      for (std::size_t k = 1; k <= S.size() && !found; ++k) {
        found = reg.contains(p);
        p     = S(p, s);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_group_bound(Semigroup const& S, GreenStructure const& G) {
    for (element_index s = 0; s < S.size(); ++s) {
      auto const    h     = G.H().class_of(idempotent_power(S, s));
      element_index p     = s;
      bool          found = false;
      for (std::size_t k = 1; k <= S.size() && !found; ++k) {
        found = G.H().class_of(p) == h;
        p     = S(p, s);
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_group_bound(Semigroup const& S) {
    return is_group_bound(S, GreenStructure(S));
  }

  std::optional<ElementSet> ccr_witness(Semigroup const& S, GreenStructure const& G) {
    auto const reg = regular_elements(S);
    auto const E   = idempotents(S);
    for (std::size_t k = 0; k < G.H().number_of_classes(); ++k) {
      auto cls = G.H().class_set(k);
      if (cls.intersects(reg) && !cls.intersects(E)) {
        return cls;
      }
    }
    return std::nullopt;
  }

  bool is_conditionally_completely_regular(Semigroup const& S, GreenStructure const& G) {
    return !ccr_witness(S, G).has_value();
  }

  bool is_conditionally_completely_regular(Semigroup const& S) {
    return is_conditionally_completely_regular(S, GreenStructure(S));
  }

  bool is_subgroup(Semigroup const& S, ElementSet const& A) {
    return is_subsemigroup(S, A) && is_group(subsemigroup(S, A).semigroup);
  }

  bool is_completely_simple(Semigroup const& S) {
    GreenStructure G(S);
    if (G.J().number_of_classes() != 1) {
      return false;
    }
    for (std::size_t k = 0; k < G.H().number_of_classes(); ++k) {
      if (!is_subgroup(S, G.H().class_set(k))) {
        return false;
      }
    }
    return true;
  }

  bool is_completely_simple(Semigroup const& S, ElementSet const& A) {
    return is_completely_simple(subsemigroup(S, A).semigroup);
  }

  bool is_clifford(Semigroup const& S) {
    if (regular_elements(S).size() != S.size()) {
      return false;
    }
    for (auto e : idempotents(S)) {
      for (element_index x = 0; x < S.size(); ++x) {
        if (S(e, x) != S(x, e)) {
          return false;
        }
      }
    }
    return true;
  }

  ElementSet maximal_subgroup(Semigroup const& S, GreenStructure const& G,
                              element_index e) {
    if (S(e, e) != e) {
      throw Error(ErrorKind::not_idempotent,
                  std::to_string(e) + " is not an idempotent", {e});
    }
    return G.H().class_set(G.H().class_of(e));
  }

  ElementSet maximal_subgroup(Semigroup const& S, element_index e) {
    return maximal_subgroup(S, GreenStructure(S), e);
  }

  ElementSet k_class(Semigroup const& S, GreenStructure const& G, element_index e) {
    auto const He = maximal_subgroup(S, G, e);
    ElementSet result(S.size());
    for (element_index s = 0; s < S.size(); ++s) {
      element_index p = s;
      for (std::size_t k = 1; k <= S.size(); ++k) {
        if (He.contains(p)) {
          result.insert(s);
          break;
        }
        p = S(p, s);
      }
    }
    return result;
  }

  ElementSet k_class(Semigroup const& S, element_index e) {
    return k_class(S, GreenStructure(S), e);
  }

}  // namespace strata
