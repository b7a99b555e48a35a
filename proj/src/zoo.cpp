#include "strata/zoo.hpp"

#include <algorithm>  // for next_permutation, shuffle, min
#include <numeric>    // for iota
#include <set>        // for set
#include <string>     // for string, to_string
#include <utility>    // for move

#include "strata/core.hpp"   // for direct_product, adjoin_zero, is_semilattice
#include "strata/error.hpp"  // for Error
#include "strata/kernels.hpp"  // for first_nonassociative_triple

namespace strata {
  namespace zoo {

    namespace {
      Semigroup build(std::size_t n, auto&& product, std::vector<std::string> labels = {}) {
        std::vector<element_index> table(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            table[i * n + j] = static_cast<element_index>(product(i, j));
          }
        }
        return Semigroup::from_flat(n, std::move(table), std::move(labels));
      }

      void require(bool ok, std::string const& msg) {
        if (!ok) {
          throw Error(ErrorKind::invalid_parameter, msg);
        }
      }

      // Every triple whose four products lie among the first `known` cells
      // associates.
      bool partially_associative(std::size_t                       n,
                                 std::vector<element_index> const& t,
                                 std::size_t                       known) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (x * n + y >= known) {
              break;
            }
            std::size_t const xy = t[x * n + y];
            for (std::size_t z = 0; z < n; ++z) {
              std::size_t const yz = y * n + z, l = xy * n + z;
              if (yz >= known || l >= known) {
                continue;
              }
              std::size_t const r = x * n + t[yz];
              if (r < known && t[l] != t[r]) {
                return false;
              }
            }
          }
        }
        return true;
      }
    }  // namespace

    Semigroup monogenic(std::size_t h, std::size_t r) {
      require(h >= 1 && r >= 1, "monogenic needs index and period at least 1");
      std::size_t const n = h + r - 1;
      std::vector<std::string> labels;
      for (std::size_t k = 1; k <= n; ++k) {
        labels.push_back(k == 1 ? "a" : "a^" + std::to_string(k));
      }
      return build(
          n,
          [h, r](std::size_t i, std::size_t j) {
            std::size_t e = i + j + 2;
            if (e >= h) {
              e = h + (e - h) % r;
            }
            return e - 1;
          },
          std::move(labels));
    }

    Semigroup cyclic_group(std::size_t n) {
      require(n >= 1, "cyclic group needs order at least 1");
      std::vector<std::string> labels{"e"};
      for (std::size_t k = 1; k < n; ++k) {
        labels.push_back(k == 1 ? "g" : "g^" + std::to_string(k));
      }
      return build(n, [n](std::size_t i, std::size_t j) { return (i + j) % n; },
                   std::move(labels));
    }

    Semigroup brandt_b2() {
      // Index 1 + 2(i-1) + (j-1) for (i,j).
      return build(
          5,
          [](std::size_t x, std::size_t y) -> std::size_t {
            if (x == 0 || y == 0) {
              return 0;
            }
            std::size_t const i = (x - 1) / 2, j = (x - 1) % 2;
            std::size_t const k = (y - 1) / 2, l = (y - 1) % 2;
            return j == k ? 1 + 2 * i + l : 0;
          },
          {"0", "(1,1)", "(1,2)", "(2,1)", "(2,2)"});
    }

    Semigroup rectangular_band(std::size_t p, std::size_t q) {
      require(p >= 1 && q >= 1, "rectangular band needs positive dimensions");
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
          labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
      }
      return build(
          p * q, [q](std::size_t x, std::size_t y) { return (x / q) * q + y % q; },
          std::move(labels));
    }

    Semigroup zero_semigroup(std::size_t n) {
      require(n >= 1, "zero semigroup needs order at least 1");
      return build(n, [](std::size_t, std::size_t) { return 0; });
    }

    Semigroup left_zero(std::size_t n) {
      require(n >= 1, "left zero semigroup needs order at least 1");
      return build(n, [](std::size_t i, std::size_t) { return i; });
    }

    Semigroup chain(std::size_t n) {
      require(n >= 1, "chain needs order at least 1");
      return build(n, [](std::size_t i, std::size_t j) { return std::min(i, j); });
    }

    Semigroup antichain_with_bottom(std::size_t k) {
      return build(k + 1,
                   [](std::size_t i, std::size_t j) { return i == j ? i : 0; });
    }

    Semigroup full_transformation_2() {
      // Images of (1, 2) under each map.
      static constexpr std::size_t img[4][2] = {{0, 1}, {1, 0}, {0, 0}, {1, 1}};
      return build(
          4,
          [](std::size_t f, std::size_t g) -> std::size_t {
            std::size_t const a = img[g][img[f][0]], b = img[g][img[f][1]];
            for (std::size_t h = 0; h < 4; ++h) {
              if (img[h][0] == a && img[h][1] == b) {
                return h;
              }
            }
            return 0;
          },
          {"id", "swap", "c1", "c2"});
    }

    Semigroup powerset_nilsemigroup(std::size_t k) {
      require(k >= 1, "powerset nilsemigroup needs k >= 1");
      if (k > 5) {
        throw Error(ErrorKind::order_too_large,
                    "powerset nilsemigroup supports k <= 5, got " + std::to_string(k));
      }
      std::size_t const        n = std::size_t(1) << k;
      std::vector<std::string> labels;
      for (std::size_t A = 0; A < n; ++A) {
        std::string s = "{";
        for (std::size_t i = 0; i < k; ++i) {
          if (A >> i & 1) {
            s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
          }
        }
        labels.push_back(s + "}");
      }
      return build(
          n,
          [](std::size_t A, std::size_t B) -> std::size_t {
            return A != 0 && B != 0 && (A & B) == 0 ? A | B : 0;
          },
          std::move(labels));
    }

    Semigroup free_nilpotent(std::size_t a, std::size_t L) {
      require(a >= 1 && L >= 1, "free nilpotent needs a >= 1 and L >= 1");
      std::vector<std::vector<std::size_t>> words;
      std::vector<std::vector<std::size_t>> level{{}};
      for (std::size_t len = 1; len < L; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (auto const& w : level) {
          for (std::size_t c = 0; c < a; ++c) {
            next.push_back(w);
            next.back().push_back(c);
          }
        }
        if (words.size() + next.size() + 1 > 200) {
          throw Error(ErrorKind::order_too_large,
                      "free nilpotent semigroup exceeds order 200");
        }
        words.insert(words.end(), next.begin(), next.end());
        level = std::move(next);
      }
      std::map<std::vector<std::size_t>, std::size_t> index;
      std::vector<std::string>                        labels;
      for (std::size_t i = 0; i < words.size(); ++i) {
        index[words[i]] = i;
        std::string s;
        for (auto c : words[i]) {
          s += a <= 26 ? std::string(1, char('a' + c)) : "x" + std::to_string(c);
        }
        labels.push_back(s);
      }
      labels.emplace_back("0");
      std::size_t const zero = words.size();
      return build(
          words.size() + 1,
          [&](std::size_t i, std::size_t j) -> std::size_t {
            if (i == zero || j == zero || words[i].size() + words[j].size() >= L) {
              return zero;
            }
            auto w = words[i];
            w.insert(w.end(), words[j].begin(), words[j].end());
            return index.at(w);
          },
          std::move(labels));
    }

    Semigroup absorption_sum(Semigroup const& R, Semigroup const& T) {
      std::size_t const r = R.size(), n = r + T.size();
      std::vector<std::string> labels;
      if (R.has_labels() || T.has_labels()) {
        for (element_index x = 0; x < r; ++x) {
          labels.push_back("r:" + R.label(x));
        }
        for (element_index x = 0; x < T.size(); ++x) {
          labels.push_back("t:" + T.label(x));
        }
      }
      return build(
          n,
          [&](std::size_t i, std::size_t j) -> std::size_t {
            if (i < r && j < r) {
              return R(i, j);
            }
            if (i >= r && j >= r) {
              return r + T(i - r, j - r);
            }
            return i >= r ? i : j;
          },
          std::move(labels));
    }

    ////////////////////////////////////////////////////////////////////////
    // Clifford semigroups
    ////////////////////////////////////////////////////////////////////////

    CliffordData with_trivial_links(Semigroup const&       semilattice,
                                    std::vector<Semigroup> groups) {
      CliffordData data{semilattice, std::move(groups), {}};
      for (element_index a = 0; a < semilattice.size(); ++a) {
        for (element_index b = 0; b < semilattice.size(); ++b) {
          if (a != b && semilattice(a, b) == b && b < data.groups.size()) {
            auto const& H = data.groups[b];
            data.linking[{a, b}].assign(a < data.groups.size() ? data.groups[a].size() : 0,
                                        H.identity().value_or(0));
          }
        }
      }
      return data;
    }

    CliffordData with_identity_links(Semigroup const& semilattice, Semigroup const& group) {
      CliffordData data{semilattice, std::vector<Semigroup>(semilattice.size(), group), {}};
      std::vector<element_index> id(group.size());
      std::iota(id.begin(), id.end(), 0);
      for (element_index a = 0; a < semilattice.size(); ++a) {
        for (element_index b = 0; b < semilattice.size(); ++b) {
          if (semilattice(a, b) == b) {
            data.linking[{a, b}] = id;
          }
        }
      }
      return data;
    }

    namespace {
      std::vector<element_index> offsets(CliffordData const& data) {
        std::vector<element_index> off{0};
        for (auto const& G : data.groups) {
          off.push_back(off.back() + static_cast<element_index>(G.size()));
        }
        return off;
      }

      std::vector<element_index> const& link(CliffordData const&         data,
                                             element_index               a,
                                             element_index               b,
                                             std::vector<element_index>& id) {
        auto it = data.linking.find({a, b});
        if (it != data.linking.end()) {
          return it->second;
        }
        id.resize(data.groups[a].size());
        std::iota(id.begin(), id.end(), 0);
        return id;
      }

      void invalid_link(std::string const& msg, std::vector<std::size_t> witness) {
        throw Error(ErrorKind::invalid_linking, msg, std::move(witness));
      }
    }  // namespace

    element_index clifford_index(CliffordData const& data, element_index alpha,
                                 element_index g) {
      return offsets(data)[alpha] + g;
    }

    Semigroup clifford(CliffordData const& data) {
      auto const& Y = data.semilattice;
      std::size_t const k = Y.size();
      require(is_semilattice(Y), "the structure semigroup is not a semilattice");
      require(data.groups.size() == k, "expected one group per semilattice element");
      for (auto const& G : data.groups) {
        require(is_group(G), "a component is not a group");
      }
      for (auto const& [key, map] : data.linking) {
        auto const [a, b] = key;
        if (a >= k || b >= k || Y(a, b) != b) {
          invalid_link("linking map given for a pair that is not alpha >= beta", {a, b});
        }
        if (map.size() != data.groups[a].size()) {
          invalid_link("linking map has the wrong length", {a, b});
        }
        for (auto x : map) {
          if (x >= data.groups[b].size()) {
            invalid_link("linking map leaves the target group", {a, b});
          }
        }
        auto const& G = data.groups[a];
        auto const& H = data.groups[b];
        for (element_index x = 0; x < G.size(); ++x) {
          if (a == b && map[x] != x) {
            invalid_link("phi_{alpha,alpha} must be the identity", {a, b});
          }
          for (element_index y = 0; y < G.size(); ++y) {
            if (map[G(x, y)] != H(map[x], map[y])) {
              invalid_link("linking map is not a homomorphism", {a, b});
            }
          }
        }
      }
      std::vector<element_index> id1, id2, id3;
      for (element_index a = 0; a < k; ++a) {
        for (element_index b = 0; b < k; ++b) {
          if (Y(a, b) != b) {
            continue;
          }
          if (a != b && !data.linking.count({a, b})) {
            invalid_link("missing linking map", {a, b});
          }
          for (element_index c = 0; c < k; ++c) {
            if (Y(b, c) != c) {
              continue;
            }
            auto const& ab = link(data, a, b, id1);
            auto const& bc = link(data, b, c, id2);
            auto const& ac = link(data, a, c, id3);
            for (element_index x = 0; x < data.groups[a].size(); ++x) {
              if (bc[ab[x]] != ac[x]) {
                invalid_link("linking maps do not compose", {a, b, c});
              }
            }
          }
        }
      }

      auto const                 off = offsets(data);
      std::size_t const          n   = off.back();
      std::vector<element_index> alpha(n), local(n);
      std::vector<std::string>   labels(n);
      for (element_index a = 0; a < k; ++a) {
        for (element_index g = 0; g < data.groups[a].size(); ++g) {
          alpha[off[a] + g] = a;
          local[off[a] + g] = g;
          labels[off[a] + g] = data.groups[a].label(g) + "_" + std::to_string(a);
        }
      }
      return build(
          n,
          [&](std::size_t x, std::size_t y) -> std::size_t {
            element_index const a = alpha[x], b = alpha[y], c = Y(a, b);
            std::vector<element_index> i1, i2;
            auto const& f = link(data, a, c, i1);
            auto const& g = link(data, b, c, i2);
            return off[c] + data.groups[c](f[local[x]], g[local[y]]);
          },
          std::move(labels));
    }

    Semigroup clifford_3() {
      // Y = {f < top}: index 0 is the top carrying Z_2, index 1 the bottom.
      auto Y    = build(2, [](std::size_t i, std::size_t j) { return std::max(i, j); });
      auto data = with_trivial_links(Y, {cyclic_group(2), cyclic_group(1)});
      return clifford(data);
    }

    PartialHom clifford_extension_4() {
      return validate_partial_hom(zero_semigroup(2), clifford_3(), {0, 1});
    }

    Semigroup clifford_6() {
      return clifford(with_identity_links(antichain_with_bottom(2), cyclic_group(2)));
    }

    Semigroup strong_semilattice(Semigroup const&              semilattice,
                                 std::vector<Semigroup> const& components) {
      auto const&       Y = semilattice;
      std::size_t const k = Y.size();
      require(is_semilattice(Y), "the structure semigroup is not a semilattice");
      require(components.size() == k, "expected one component per semilattice element");
      std::vector<element_index> off{0}, least_idempotent;
      for (auto const& C : components) {
        off.push_back(off.back() + static_cast<element_index>(C.size()));
        element_index e = 0;
        while (C(e, e) != e) {
          ++e;
        }
        least_idempotent.push_back(e);
      }
      std::size_t const          n = off.back();
      std::vector<element_index> alpha(n), local(n);
      for (element_index a = 0; a < k; ++a) {
        for (element_index x = 0; x < components[a].size(); ++x) {
          alpha[off[a] + x] = a;
          local[off[a] + x] = x;
        }
      }
      return build(n, [&](std::size_t x, std::size_t y) -> std::size_t {
        element_index const a = alpha[x], b = alpha[y], c = Y(a, b);
        element_index const u = a == c ? local[x] : least_idempotent[c];
        element_index const v = b == c ? local[y] : least_idempotent[c];
        return off[c] + components[c](u, v);
      });
    }

    ////////////////////////////////////////////////////////////////////////
    // The partial map example
    ////////////////////////////////////////////////////////////////////////

    PartialMapExtension partial_map_extension(std::size_t                       n,
                                              std::size_t                       m,
                                              std::vector<Semigroup> const&     groups,
                                              std::vector<element_index> const& picks) {
      require(n >= 1 && m >= 1, "partial map example needs n, m >= 1");
      require(groups.size() == n && picks.size() == n,
              "expected one group and one pick per coordinate");
      for (std::size_t i = 0; i < n; ++i) {
        require(is_group(groups[i]), "coordinate " + std::to_string(i + 1) + " is not a group");
        require(picks[i] < groups[i].size(),
                "pick " + std::to_string(i + 1) + " is not in its group");
      }
      std::size_t s_order = 1, t_prime = 1;
      for (std::size_t i = 0; i < n; ++i) {
        s_order *= groups[i].size() + 1;
        t_prime *= m + 1;
        if (s_order + t_prime > 401) {
          throw Error(ErrorKind::order_too_large,
                      "partial map extension exceeds order 400");
        }
      }

      // S = G_1^0 × ... × G_n^0 with coordinate 1 most significant.
      Semigroup S = adjoin_zero(groups[0]);
      for (std::size_t i = 1; i < n; ++i) {
        S = direct_product(S, adjoin_zero(groups[i]));
      }
      std::vector<std::uint32_t> s_dom(S.size());
      for (std::size_t x = 0; x < S.size(); ++x) {
        std::size_t rest = x;
        for (std::size_t i = n; i-- > 0;) {
          std::size_t const base = groups[i].size() + 1;
          if (rest % base != groups[i].size()) {
            s_dom[x] |= std::uint32_t(1) << i;
          }
          rest /= base;
        }
      }

      // T' codes: digit i (coordinate 1 most significant) is 0 when undefined.
      auto digits = [&](std::size_t code) {
        std::vector<std::size_t> d(n);
        for (std::size_t i = n; i-- > 0;) {
          d[i] = code % (m + 1);
          code /= m + 1;
        }
        return d;
      };
      auto in_ideal = [&](std::vector<std::size_t> const& d) {
        for (auto v : d) {
          if (v != 0 && v != m) {
            return false;
          }
        }
        return true;
      };
      std::vector<std::size_t> code_of;  // T index -> T' code, zero last
      std::map<std::size_t, element_index> t_index;
      for (std::size_t c = 0; c < t_prime; ++c) {
        if (!in_ideal(digits(c))) {
          t_index[c] = static_cast<element_index>(code_of.size());
          code_of.push_back(c);
        }
      }
      element_index const      zero = static_cast<element_index>(code_of.size());
      std::vector<std::string> labels;
      for (auto c : code_of) {
        std::string s = "(";
        for (auto v : digits(c)) {
          s += (s.size() > 1 ? "," : "") + (v == 0 ? std::string("-") : std::to_string(v));
        }
        labels.push_back(s + ")");
      }
      labels.emplace_back("0");
      Semigroup T = build(
          code_of.size() + 1,
          [&](std::size_t A, std::size_t B) -> std::size_t {
            if (A == zero || B == zero) {
              return zero;
            }
            auto const f = digits(code_of[A]), g = digits(code_of[B]);
            std::size_t code = 0;
            std::vector<std::size_t> h(n);
            for (std::size_t i = 0; i < n; ++i) {
              h[i] = f[i] != 0 && g[i] != 0 ? std::min(f[i] + g[i], m) : 0;
              code = code * (m + 1) + h[i];
            }
            return in_ideal(h) ? zero : t_index.at(code);
          },
          std::move(labels));

      std::vector<element_index> map(T.size(), no_element);
      std::vector<std::uint32_t> t_dom(T.size(), 0);
      for (element_index A = 0; A < zero; ++A) {
        auto const  f = digits(code_of[A]);
        std::size_t x = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t c = groups[i].size();
          if (f[i] != 0) {
            c = groups[i].power(picks[i], f[i]);
            t_dom[A] |= std::uint32_t(1) << i;
          }
          x = x * (groups[i].size() + 1) + c;
        }
        map[A] = static_cast<element_index>(x);
      }
      auto phi = validate_partial_hom(std::move(T), S, std::move(map));
      PartialMapExtension out{build_extension(phi), {}, n, m};
      auto const& w = out.witness;
      for (element_index x = 0; x < w.sigma.size(); ++x) {
        out.dom.push_back(w.ideal.contains(x) ? s_dom[w.s_of_sigma[x]]
                                              : t_dom[w.t_of_sigma[x]]);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Enumeration
    ////////////////////////////////////////////////////////////////////////

    AssociativeTables::AssociativeTables(std::size_t n)
        : AssociativeTables(n, {}) {}

    AssociativeTables::AssociativeTables(std::size_t n, std::vector<element_index> prefix)
        : _n(n), _fixed(prefix.size()), _table(n * n, 0), _pos(0) {
      if (n > max_order) {
        throw Error(ErrorKind::order_too_large,
                    "exhaustive enumeration supports order <= " + std::to_string(max_order)
                        + ", got " + std::to_string(n));
      }
      require(n >= 1, "enumeration needs order at least 1");
      require(prefix.size() <= n * n, "prefix longer than the table");
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        require(prefix[i] < n, "prefix entry out of range");
        _table[i] = prefix[i];
      }
    }

    bool AssociativeTables::consistent(std::size_t known) const {
      return partially_associative(_n, _table, known);
    }

    // Moves to the next candidate value at _pos, backing up as needed.
    bool AssociativeTables::advance() {
      while (true) {
        if (_table[_pos] + 1 < _n) {
          ++_table[_pos];
          return true;
        }
        if (_pos == _fixed) {
          return false;
        }
        _table[_pos] = 0;
        --_pos;
      }
    }

    std::optional<Semigroup> AssociativeTables::next() {
      std::size_t const N = _n * _n;
      if (_done) {
        return std::nullopt;
      }
      if (!_started) {
        _started = true;
        if (!consistent(_fixed)) {
          _done = true;
          return std::nullopt;
        }
        if (_fixed == N) {
          _done = true;
          return Semigroup::from_flat(_n, _table);
        }
        _pos = _fixed;
      } else if (!advance()) {
        _done = true;
        return std::nullopt;
      }
      while (true) {
        if (consistent(_pos + 1)) {
          if (_pos + 1 == N) {
            return Semigroup::from_flat(_n, _table);
          }
          ++_pos;
          _table[_pos] = 0;
          continue;
        }
        if (!advance()) {
          _done = true;
          return std::nullopt;
        }
      }
    }

    std::vector<element_index> canonical_form(Semigroup const& S) {
      std::size_t const          n = S.size();
      std::vector<element_index> best, cur(n * n), p(n);
      for (int side = 0; side < 2; ++side) {
        std::iota(p.begin(), p.end(), 0);
        do {
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              auto const v = side == 0 ? S(i, j) : S(j, i);
              cur[p[i] * n + p[j]] = p[v];
            }
          }
          if (best.empty() || cur < best) {
            best = cur;
          }
        } while (std::next_permutation(p.begin(), p.end()));
      }
      return best;
    }

    namespace {
      std::vector<Semigroup> dedup_in_order(std::vector<Semigroup> all) {
        std::set<std::vector<element_index>> seen;
        std::vector<Semigroup>               out;
        for (auto& S : all) {
          if (seen.insert(canonical_form(S)).second) {
            out.push_back(std::move(S));
          }
        }
        return out;
      }
    }  // namespace

    std::vector<Semigroup> enumerate_associative(std::size_t n, bool dedup) {
      AssociativeTables      tables(n);
      std::vector<Semigroup> out;
      while (auto S = tables.next()) {
        out.push_back(std::move(*S));
      }
      return dedup ? dedup_in_order(std::move(out)) : out;
    }

    std::vector<Semigroup> enumerate_associative_parallel(std::size_t n, bool dedup) {
      if (n > AssociativeTables::max_order) {
        throw Error(ErrorKind::order_too_large,
                    "exhaustive enumeration supports order <= "
                        + std::to_string(AssociativeTables::max_order) + ", got "
                        + std::to_string(n));
      }
      require(n >= 1, "enumeration needs order at least 1");
      std::size_t chunks = 1;
      for (std::size_t i = 0; i < n; ++i) {
        chunks *= n;
      }
      std::vector<std::vector<Semigroup>> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
      for (std::size_t c = 0; c < chunks; ++c) {
        std::vector<element_index> prefix(n);
        std::size_t                rest = c;
        for (std::size_t i = n; i-- > 0;) {
          prefix[i] = static_cast<element_index>(rest % n);
          rest /= n;
        }
        AssociativeTables tables(n, std::move(prefix));
        while (auto S = tables.next()) {
          parts[c].push_back(std::move(*S));
        }
      }
      std::vector<Semigroup> out;
      for (auto& part : parts) {
        for (auto& S : part) {
          out.push_back(std::move(S));
        }
      }
      return dedup ? dedup_in_order(std::move(out)) : out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Random generation
    ////////////////////////////////////////////////////////////////////////

    std::vector<element_index> uniform_random_table(std::size_t n, Rng& rng) {
      std::uniform_int_distribution<element_index> pick(0, static_cast<element_index>(n - 1));
      std::vector<element_index>                   table(n * n);
      for (auto& x : table) {
        x = pick(rng);
      }
      return table;
    }

    Semigroup random_associative(std::size_t n, Rng& rng) {
      require(n >= 1, "random table needs order at least 1");
      std::size_t const                       N = n * n;
      std::vector<element_index>              table(N, 0);
      std::vector<std::vector<element_index>> order(N);
      std::vector<std::size_t>                tried(N, 0);
      std::size_t                             pos = 0;
      auto shuffle_at = [&](std::size_t p) {
        order[p].resize(n);
        std::iota(order[p].begin(), order[p].end(), 0);
        std::shuffle(order[p].begin(), order[p].end(), rng);
        tried[p] = 0;
      };
      shuffle_at(0);
      while (pos < N) {
        if (tried[pos] == n) {
          // Exhausted: back up. Position 0 always succeeds eventually since
          // constant tables are associative.
          --pos;
          continue;
        }
        table[pos] = order[pos][tried[pos]++];
        if (partially_associative(n, table, pos + 1)) {
          if (++pos < N) {
            shuffle_at(pos);
          }
        }
      }
      return Semigroup::from_flat(n, std::move(table));
    }

    std::vector<Semigroup>
    sample_associative(std::size_t n, std::size_t count, Sampler sampler, Rng& rng) {
      std::vector<Semigroup> out;
      for (std::size_t i = 0; i < count; ++i) {
        if (sampler == Sampler::backtrack) {
          out.push_back(random_associative(n, rng));
          continue;
        }
        auto table = uniform_random_table(n, rng);
        if (!kernels::first_nonassociative_triple(n, table)) {
          out.push_back(Semigroup::from_flat(n, std::move(table)));
        }
      }
      return out;
    }

    PartialHom random_partial_hom(Rng& rng) {
      auto pick = [&](std::size_t k) {
        return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
      };
      std::vector<Semigroup> cliffords{
          cyclic_group(2),
          cyclic_group(3),
          clifford_3(),
          clifford(with_identity_links(chain(2), cyclic_group(2))),
          clifford(with_trivial_links(chain(3),
                                      {cyclic_group(1), cyclic_group(2), cyclic_group(3)})),
          clifford_6(),
          clifford(with_trivial_links(antichain_with_bottom(2),
                                      {cyclic_group(1), cyclic_group(3), cyclic_group(2)})),
          direct_product(adjoin_zero(cyclic_group(2)), adjoin_zero(cyclic_group(1)))};
      std::vector<Semigroup> nils{zero_semigroup(2),      zero_semigroup(3),
                                  monogenic(3, 1),        monogenic(4, 1),
                                  powerset_nilsemigroup(2), free_nilpotent(2, 3),
                                  free_nilpotent(1, 4)};
      Semigroup const S = cliffords[pick(cliffords.size())];
      Semigroup const T = nils[pick(nils.size())];
      element_index const zero = *T.zero();

      std::vector<element_index> nonzero;
      for (element_index A = 0; A < T.size(); ++A) {
        if (A != zero) {
          nonzero.push_back(A);
        }
      }
      std::vector<element_index> map(T.size(), no_element);
      // The law on every pair whose factors and product are already mapped.
      auto ok = [&] {
        for (auto x : nonzero) {
          for (auto y : nonzero) {
            auto const xy = T(x, y);
            if (map[x] != no_element && map[y] != no_element && xy != zero
                && map[xy] != no_element && map[xy] != S(map[x], map[y])) {
              return false;
            }
          }
        }
        return true;
      };
      std::vector<std::vector<element_index>> order(nonzero.size());
      std::vector<std::size_t>                tried(nonzero.size(), 0);
      auto shuffle_at = [&](std::size_t p) {
        order[p].resize(S.size());
        std::iota(order[p].begin(), order[p].end(), 0);
        std::shuffle(order[p].begin(), order[p].end(), rng);
        tried[p] = 0;
      };
      std::size_t pos = 0;
      if (!nonzero.empty()) {
        shuffle_at(0);
      }
      while (pos < nonzero.size()) {
        auto const A = nonzero[pos];
        if (tried[pos] == S.size()) {
          map[A] = no_element;
          --pos;
          map[nonzero[pos]] = no_element;
          continue;
        }
        map[A] = order[pos][tried[pos]++];
        if (ok()) {
          if (++pos < nonzero.size()) {
            shuffle_at(pos);
          }
        } else {
          map[A] = no_element;
        }
      }
      return validate_partial_hom(T, S, std::move(map));
    }

    ////////////////////////////////////////////////////////////////////////
    // Registry
    ////////////////////////////////////////////////////////////////////////

    std::vector<FixtureInfo> const& fixtures() {
      static std::vector<FixtureInfo> const list{
          {"monogenic", "h r", "monogenic semigroup of index h and period r"},
          {"cyclic", "n", "cyclic group of order n"},
          {"null", "", "null semigroup N2 = {0, a}"},
          {"zero", "n", "zero semigroup of order n"},
          {"left_zero", "n", "left zero semigroup of order n"},
          {"chain", "n", "chain semilattice of order n"},
          {"antichain", "k", "k atoms above a bottom"},
          {"brandt_b2", "", "Brandt semigroup B2"},
          {"rectangular_band", "p q", "p x q rectangular band"},
          {"t2", "", "full transformation semigroup on 2 points"},
          {"powerset", "k", "powerset nilsemigroup on {1..k}"},
          {"free_nilpotent", "a L", "words of length < L over a letters, plus 0"},
          {"clifford3", "", "Z2 above the trivial group"},
          {"clifford4", "", "N2 over clifford3 with A -> g"},
          {"clifford6", "", "three copies of Z2 over 2 atoms and a bottom"},
      };
      return list;
    }

    Semigroup named_fixture(std::string const& name, std::vector<std::size_t> const& params) {
      for (auto const& info : fixtures()) {
        if (info.name != name) {
          continue;
        }
        std::size_t const expected
            = info.parameters.empty()
                  ? 0
                  : std::count(info.parameters.begin(), info.parameters.end(), ' ') + 1;
        if (params.size() != expected) {
          throw Error(ErrorKind::invalid_parameter,
                      "fixture " + name + " takes " + std::to_string(expected)
                          + " parameter(s), got " + std::to_string(params.size()));
        }
        auto p = [&](std::size_t i) { return params[i]; };
        if (name == "monogenic") return monogenic(p(0), p(1));
        if (name == "cyclic") return cyclic_group(p(0));
        if (name == "null") return zero_semigroup(2);
        if (name == "zero") return zero_semigroup(p(0));
        if (name == "left_zero") return left_zero(p(0));
        if (name == "chain") return chain(p(0));
        if (name == "antichain") return antichain_with_bottom(p(0));
        if (name == "brandt_b2") return brandt_b2();
        if (name == "rectangular_band") return rectangular_band(p(0), p(1));
        if (name == "t2") return full_transformation_2();
        if (name == "powerset") return powerset_nilsemigroup(p(0));
        if (name == "free_nilpotent") return free_nilpotent(p(0), p(1));
        if (name == "clifford3") return clifford_3();
        if (name == "clifford4") return build_extension(clifford_extension_4()).sigma;
        if (name == "clifford6") return clifford_6();
      }
      throw Error(ErrorKind::invalid_parameter, "unknown fixture '" + name + "'");
    }

  }  // namespace zoo
}  // namespace strata
