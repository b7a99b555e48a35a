#include "strata/core.hpp"

#include <algorithm>  // for sort
#include <string>     // for string, to_string
#include <tuple>      // for tuple

#include "strata/error.hpp"  // for Error

namespace strata {

  ////////////////////////////////////////////////////////////////////////
  // Set products and powers
  ////////////////////////////////////////////////////////////////////////

  ElementSet product_set(Semigroup const& S, ElementSet const& A,
                         ElementSet const& B) {
    ElementSet result(S.size());
    for (auto a : A) {
      auto row = S.row(a);
      for (auto b : B) {
        result.insert(row[b]);
      }
    }
    return result;
  }

  PowerChain::PowerChain(Semigroup const& S) {
    auto const whole = ElementSet::full(S.size());
    _powers.push_back(whole);
    while (true) {
      auto next = product_set(S, _powers.back(), whole);
      if (next == _powers.back()) {
        break;
      }
      _powers.push_back(std::move(next));
    }
  }

  ElementSet const& PowerChain::power(std::size_t m) const {
    if (m == 0) {
      throw Error(ErrorKind::invalid_parameter, "powers start at S^1");
    }
    return m <= _powers.size() ? _powers[m - 1] : _powers.back();
  }

  ElementSet power_set(Semigroup const& S, std::size_t m) {
    if (m == 0) {
      throw Error(ErrorKind::invalid_parameter, "powers start at S^1");
    }
    auto const whole  = ElementSet::full(S.size());
    ElementSet current = whole;
    for (std::size_t k = 1; k < m; ++k) {
      auto next = product_set(S, current, whole);
      if (next == current) {
        break;
      }
      current = std::move(next);
    }
    return current;
  }

  ElementSet closure(Semigroup const& S, ElementSet const& gens) {
    if (gens.empty()) {
      throw Error(ErrorKind::empty_generators, "closure needs a generator");
    }
    ElementSet result = gens;
    ElementSet frontier = gens;
    while (!frontier.empty()) {
      auto fresh = (product_set(S, result, frontier) | product_set(S, frontier, result))
                   - result;
      result |= fresh;
      frontier = std::move(fresh);
    }
    return result;
  }

  bool is_subsemigroup(Semigroup const& S, ElementSet const& A) {
    return !A.empty() && product_set(S, A, A).is_subset_of(A);
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  bool is_left_ideal(Semigroup const& S, ElementSet const& A) {
    return !A.empty() && product_set(S, ElementSet::full(S.size()), A).is_subset_of(A);
  }

  bool is_right_ideal(Semigroup const& S, ElementSet const& A) {
    return !A.empty() && product_set(S, A, ElementSet::full(S.size())).is_subset_of(A);
  }

  bool is_ideal(Semigroup const& S, ElementSet const& A) {
    return is_left_ideal(S, A) && is_right_ideal(S, A);
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Quotient rees_quotient(Semigroup const& S, ElementSet const& I) {
    if (!is_ideal(S, I)) {
      throw Error(ErrorKind::not_an_ideal, "Rees quotient needs a two-sided ideal");
    }
    std::size_t const          n    = S.size();
    std::size_t const          kept = n - I.size();
    auto const                 zero = static_cast<element_index>(kept);
    std::vector<element_index> map(n, zero);
    std::vector<element_index> back;
    for (element_index x = 0; x < n; ++x) {
      if (!I.contains(x)) {
        map[x] = static_cast<element_index>(back.size());
        back.push_back(x);
      }
    }
    std::size_t const          m = kept + 1;
    std::vector<element_index> table(m * m, zero);
    for (std::size_t i = 0; i < kept; ++i) {
      for (std::size_t j = 0; j < kept; ++j) {
        table[i * m + j] = map[S(back[i], back[j])];
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      for (auto x : back) {
        labels.push_back(S.label(x));
      }
      labels.emplace_back("0");
    }
    return {Semigroup::from_flat(m, std::move(table), std::move(labels)), std::move(map)};
  }

  Semigroup direct_product(Semigroup const& S, Semigroup const& T) {
    std::size_t const          p = S.size(), q = T.size(), n = p * q;
    std::vector<element_index> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto s = S(static_cast<element_index>(a / q), static_cast<element_index>(b / q));
        auto t = T(static_cast<element_index>(a % q), static_cast<element_index>(b % q));
        table[a * n + b] = static_cast<element_index>(s * q + t);
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels() || T.has_labels()) {
      for (std::size_t a = 0; a < n; ++a) {
        labels.push_back("(" + S.label(static_cast<element_index>(a / q)) + ","
                         + T.label(static_cast<element_index>(a % q)) + ")");
      }
    }
    return Semigroup::from_flat(n, std::move(table), std::move(labels));
  }

  Subsemigroup subsemigroup(Semigroup const& S, ElementSet const& A) {
    if (!is_subsemigroup(S, A)) {
      throw Error(ErrorKind::not_a_subsemigroup,
                  A.to_string() + " is not closed under multiplication");
    }
    auto                       embedding = A.to_vector();
    std::vector<element_index> index(S.size(), no_element);
    for (std::size_t k = 0; k < embedding.size(); ++k) {
      index[embedding[k]] = static_cast<element_index>(k);
    }
    std::size_t const          m = embedding.size();
    std::vector<element_index> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = index[S(embedding[i], embedding[j])];
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      for (auto x : embedding) {
        labels.push_back(S.label(x));
      }
    }
    return {Semigroup::from_flat(m, std::move(table), std::move(labels)),
            std::move(embedding)};
  }

  bool is_globally_idempotent(Semigroup const& S) {
    auto whole = ElementSet::full(S.size());
    return product_set(S, whole, whole) == whole;
  }

  namespace {
    // Adjoins one element with index n; fresh_is_zero selects absorbing
    // (true) or neutral (false) behaviour.
    Semigroup adjoin(Semigroup const& S, bool fresh_is_zero, char const* label) {
      std::size_t const          n = S.size(), m = n + 1;
      auto const                 fresh = static_cast<element_index>(n);
      std::vector<element_index> table(m * m);
      for (element_index i = 0; i < m; ++i) {
        for (element_index j = 0; j < m; ++j) {
          element_index v;
          if (i < n && j < n) {
            v = S(i, j);
          } else if (fresh_is_zero) {
            v = fresh;
          } else {
            v = (i == fresh) ? j : i;
          }
          table[i * m + j] = v;
        }
      }
      std::vector<std::string> labels;
      if (S.has_labels()) {
        labels = S.labels();
        labels.emplace_back(label);
      }
      return Semigroup::from_flat(m, std::move(table), std::move(labels));
    }
  }  // namespace

  Semigroup adjoin_zero(Semigroup const& S) {
    return adjoin(S, true, "0");
  }

  Semigroup adjoin_identity(Semigroup const& S) {
    return adjoin(S, false, "1");
  }

  Semigroup monoid_closure(Semigroup const& S) {
    return S.identity() ? S : adjoin_identity(S);
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::array<element_index, 3>>
  congruence_violation(Semigroup const& S, Partition const& p) {
    for (auto const& cls : p.classes()) {
      auto a = cls.front();
      for (std::size_t k = 1; k < cls.size(); ++k) {
        auto b = cls[k];
        for (element_index x = 0; x < S.size(); ++x) {
          if (!p.same_class(S(a, x), S(b, x)) || !p.same_class(S(x, a), S(x, b))) {
            return std::array<element_index, 3>{a, b, x};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool is_congruence(Semigroup const& S, Partition const& p) {
    return !congruence_violation(S, p).has_value();
  }

  namespace {
    // Restricted growth strings over elements 0..n-1. After placing element
    // k only products whose value is already placed can be compared, which
    // is enough to prune most of the tree.
    class CongruenceSearch {
     public:
      explicit CongruenceSearch(Semigroup const& S)
          : _S(S), _n(S.size()), _label(S.size(), 0) {}

      std::vector<Partition> run() {
        if (_n > 0) {
          descend(1, 0);
        }
        return std::move(_found);
      }

     private:
      bool consistent(std::size_t placed) const {
        // elements 0..placed-1 are labelled; the newest is placed-1.
        auto const k = static_cast<element_index>(placed - 1);
        for (element_index a = 0; a < placed; ++a) {
          for (element_index b = a + 1; b < placed; ++b) {
            if (_label[a] != _label[b]) {
              continue;
            }
            for (element_index x = 0; x < _n; ++x) {
              auto ax = _S(a, x), bx = _S(b, x), xa = _S(x, a), xb = _S(x, b);
              bool const fresh = a == k || b == k || ax == k || bx == k || xa == k
                                 || xb == k || x == k;
              if (!fresh) {
                continue;
              }
              if (ax < placed && bx < placed && _label[ax] != _label[bx]) {
                return false;
              }
              if (xa < placed && xb < placed && _label[xa] != _label[xb]) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void descend(std::size_t placed, std::size_t max_label) {
        if (placed == _n) {
          Partition p = Partition::from_labels(_label);
          if (is_congruence(_S, p)) {
            _found.push_back(std::move(p));
          }
          return;
        }
        for (std::size_t l = 0; l <= max_label + 1; ++l) {
          _label[placed] = l;
          if (consistent(placed + 1)) {
            descend(placed + 1, std::max(max_label, l));
          }
        }
        _label[placed] = 0;
      }

      Semigroup const&         _S;
      std::size_t              _n;
      std::vector<std::size_t> _label;
      std::vector<Partition>   _found;
    };
  }  // namespace

  std::vector<Partition> enumerate_congruences(Semigroup const& S, std::size_t cap) {
    if (S.size() > cap) {
      throw Error(ErrorKind::order_too_large,
                  "congruence enumeration is capped at order " + std::to_string(cap)
                      + ", got " + std::to_string(S.size()));
    }
    return CongruenceSearch(S).run();
  }

  Quotient quotient_by_congruence(Semigroup const& S, Partition const& p) {
    if (p.universe_size() != S.size()) {
      throw Error(ErrorKind::invalid_parameter, "partition is over the wrong universe");
    }
    if (auto bad = congruence_violation(S, p)) {
      auto [a, b, x] = *bad;
      throw Error(ErrorKind::not_a_congruence,
                  std::to_string(a) + " ~ " + std::to_string(b)
                      + " is not preserved by multiplication with " + std::to_string(x),
                  {a, b, x});
    }
    std::size_t const          m = p.number_of_classes();
    std::vector<element_index> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = static_cast<element_index>(
            p.class_of(S(p.members(i).front(), p.members(j).front())));
      }
    }
    std::vector<element_index> map(S.size());
    for (element_index x = 0; x < S.size(); ++x) {
      map[x] = static_cast<element_index>(p.class_of(x));
    }
    return {Semigroup::from_flat(m, std::move(table)), std::move(map)};
  }

  ElementSet image(std::vector<element_index> const& map, ElementSet const& A,
                   std::size_t universe) {
    ElementSet result(universe);
    for (auto a : A) {
      result.insert(map[a]);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Actions and reductivity
  ////////////////////////////////////////////////////////////////////////

  bool interchangeable(Semigroup const& S, element_index a, element_index b) {
    if (a == b) {
      return false;
    }
    for (element_index x = 0; x < S.size(); ++x) {
      if (S(a, x) != S(b, x) || S(x, a) != S(x, b)) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::pair<element_index, element_index>>
  interchangeable_pair(Semigroup const& S) {
    for (element_index a = 0; a < S.size(); ++a) {
      for (element_index b = a + 1; b < S.size(); ++b) {
        if (interchangeable(S, a, b)) {
          return std::make_pair(a, b);
        }
      }
    }
    return std::nullopt;
  }

  bool is_weakly_reductive(Semigroup const& S) {
    return !interchangeable_pair(S).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Table properties
  ////////////////////////////////////////////////////////////////////////

  bool is_commutative(Semigroup const& S) {
    for (element_index a = 0; a < S.size(); ++a) {
      for (element_index b = a + 1; b < S.size(); ++b) {
        if (S(a, b) != S(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_band(Semigroup const& S) {
    for (element_index a = 0; a < S.size(); ++a) {
      if (S(a, a) != a) {
        return false;
      }
    }
    return true;
  }

  bool is_semilattice(Semigroup const& S) {
    return is_band(S) && is_commutative(S);
  }

  bool is_group(Semigroup const& S) {
    auto e = S.identity();
    if (!e) {
      return false;
    }
    for (element_index a = 0; a < S.size(); ++a) {
      bool found = false;
      for (element_index b = 0; b < S.size() && !found; ++b) {
        found = S(a, b) == *e && S(b, a) == *e;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  Semigroup dual(Semigroup const& S) {
    std::size_t const          n = S.size();
    std::vector<element_index> table(n * n);
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        table[i * n + j] = S(j, i);
      }
    }
    return Semigroup::from_flat(n, std::move(table), S.labels());
  }

  namespace {
    using signature = std::tuple<bool, std::size_t, std::size_t, std::size_t,
                                 std::size_t, std::size_t, std::size_t>;

    // Isomorphism-invariant data about one element: idempotency, how many
    // elements fix it from each side, the sizes of its row and column
    // images, and the index and period of its monogenic subsemigroup.
    std::vector<signature> signatures(Semigroup const& S) {
      std::size_t const      n = S.size();
      std::vector<signature> out(n);
      for (element_index a = 0; a < n; ++a) {
        std::size_t left_fix = 0, right_fix = 0;
        ElementSet  row_img(n), col_img(n);
        for (element_index x = 0; x < n; ++x) {
          left_fix += S(x, a) == a;
          right_fix += S(a, x) == a;
          row_img.insert(S(a, x));
          col_img.insert(S(x, a));
        }
        std::vector<element_index> seen(n, 0);
        element_index              p    = a;
        std::size_t                k    = 1;
        while (seen[p] == 0) {
          seen[p] = static_cast<element_index>(k++);
          p       = S(p, a);
        }
        std::size_t const index  = seen[p];
        std::size_t const period = k - seen[p];
        out[a] = {S(a, a) == a, left_fix, right_fix, row_img.size(), col_img.size(),
                  index, period};
      }
      return out;
    }

    class IsomorphismSearch {
     public:
      IsomorphismSearch(Semigroup const& S, Semigroup const& T)
          : _S(S),
            _T(T),
            _n(S.size()),
            _sig_s(signatures(S)),
            _sig_t(signatures(T)),
            _f(S.size(), no_element),
            _used(S.size(), false) {}

      std::optional<std::vector<element_index>> run() {
        auto a = _sig_s, b = _sig_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        if (descend(0)) {
          return _f;
        }
        return std::nullopt;
      }

     private:
      bool consistent(element_index a) const {
        for (element_index x = 0; x <= a; ++x) {
          for (element_index y = 0; y <= a; ++y) {
            if (x != a && y != a && _S(x, y) != a) {
              continue;
            }
            auto xy = _S(x, y);
            if (xy <= a && _f[xy] != _T(_f[x], _f[y])) {
              return false;
            }
          }
        }
        return true;
      }

      bool descend(element_index a) {
        if (a == _n) {
          return true;
        }
        for (element_index b = 0; b < _n; ++b) {
          if (_used[b] || _sig_s[a] != _sig_t[b]) {
            continue;
          }
          _f[a]    = b;
          _used[b] = true;
          if (consistent(a) && descend(a + 1)) {
            return true;
          }
          _used[b] = false;
        }
        _f[a] = no_element;
        return false;
      }

      Semigroup const&           _S;
      Semigroup const&           _T;
      std::size_t                _n;
      std::vector<signature>     _sig_s;
      std::vector<signature>     _sig_t;
      std::vector<element_index> _f;
      std::vector<bool>          _used;
    };
  }  // namespace

  std::optional<std::vector<element_index>>
  find_isomorphism(Semigroup const& S, Semigroup const& T, std::size_t cap) {
    if (S.size() > cap || T.size() > cap) {
      throw Error(ErrorKind::order_too_large,
                  "isomorphism search is capped at order " + std::to_string(cap));
    }
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    return IsomorphismSearch(S, T).run();
  }

}  // namespace strata
