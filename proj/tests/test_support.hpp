// Helpers and brute-force oracles shared by the unit tests. The oracles are
// written without using the library's algorithms so they can check them.

#ifndef STRATA_TESTS_TEST_SUPPORT_HPP_
#define STRATA_TESTS_TEST_SUPPORT_HPP_

#include <cstddef>           // for size_t
#include <initializer_list>  // for initializer_list
#include <ostream>           // for ostream
#include <set>               // for set
#include <stdexcept>         // for invalid_argument, logic_error
#include <string>            // for string
#include <vector>            // for vector

#include "strata/element_set.hpp"
#include "strata/error.hpp"
#include "strata/semigroup.hpp"

namespace strata {

  // Lets Catch print sets in failure messages.
  inline std::ostream& operator<<(std::ostream& os, ElementSet const& A) {
    return os << A.to_string();
  }

}  // namespace strata

namespace strata::test {

  inline ElementSet set(Semigroup const& S, std::initializer_list<element_index> xs) {
    return ElementSet(S.size(), xs);
  }

  inline element_index at(Semigroup const& S, std::string const& label) {
    for (element_index x = 0; x < S.size(); ++x) {
      if (S.label(x) == label) {
        return x;
      }
    }
    throw std::invalid_argument("no element labelled " + label);
  }

  inline ElementSet labelled(Semigroup const& S, std::initializer_list<char const*> labels) {
    ElementSet out(S.size());
    for (auto l : labels) {
      out.insert(at(S, l));
    }
    return out;
  }

  // Runs f and returns the ErrorKind it throws; fails the test otherwise.
  template <typename F>
  ErrorKind kind_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    throw std::logic_error("expected strata::Error");
  }

  template <typename F>
  std::vector<std::size_t> witness_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.witness();
    }
    throw std::logic_error("expected strata::Error");
  }

  namespace oracle {

    // (ij)k = i(jk) by the definition, over every triple.
    inline bool associative(std::size_t n, std::vector<element_index> const& t) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            if (t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    // Every associative table of order n, found by filtering all n^(n^2)
    // tables in lexicographic order of the row-major entries.
    inline std::vector<std::vector<element_index>> all_associative(std::size_t n) {
      std::vector<std::vector<element_index>> out;
      std::vector<element_index>              t(n * n, 0);
      while (true) {
        if (associative(n, t)) {
          out.push_back(t);
        }
        std::size_t p = t.size();
        while (p > 0 && ++t[p - 1] == n) {
          t[--p] = 0;
        }
        if (p == 0) {
          return out;
        }
      }
    }

    // The product of every word of length m over S.
    inline std::set<element_index> word_power(Semigroup const& S, std::size_t m) {
      std::set<element_index> current;
      for (element_index x = 0; x < S.size(); ++x) {
        current.insert(x);
      }
      std::set<element_index> words = current;
      for (std::size_t len = 1; len < m; ++len) {
        std::set<element_index> next;
        for (auto w : words) {
          for (element_index x = 0; x < S.size(); ++x) {
            next.insert(S(w, x));
          }
        }
        words = next;
      }
      return words;
    }

    inline ElementSet to_set(Semigroup const& S, std::set<element_index> const& xs) {
      ElementSet out(S.size());
      for (auto x : xs) {
        out.insert(x);
      }
      return out;
    }

    // The intersection of S^m for m = 1 .. |S| + 1.
    inline ElementSet base(Semigroup const& S) {
      ElementSet out = ElementSet::full(S.size());
      for (std::size_t m = 1; m <= S.size() + 1; ++m) {
        out = out & to_set(S, word_power(S, m));
      }
      return out;
    }

    // W(s) straight from s' s s' = s'.
    inline ElementSet weak_inverses(Semigroup const& S, element_index s) {
      ElementSet out(S.size());
      for (element_index x = 0; x < S.size(); ++x) {
        if (S(S(x, s), x) == x) {
          out.insert(x);
        }
      }
      return out;
    }

  }  // namespace oracle

}  // namespace strata::test

#endif  // STRATA_TESTS_TEST_SUPPORT_HPP_
