#include "strata/semigroup.hpp"

#include <utility>  // for move

#include "strata/error.hpp"    // for Error
#include "strata/kernels.hpp"  // for first_nonassociative_triple

namespace strata {

  namespace {
    bool valid_label(std::string const& label) {
      if (label.empty()) {
        return false;
      }
      for (char c : label) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v'
            || c == '\f') {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Semigroup Semigroup::from_table(std::vector<std::vector<element_index>> const& rows,
                                  std::vector<std::string> labels) {
    std::size_t const n = rows.size();
    if (n == 0) {
      throw Error(ErrorKind::empty_table, "a semigroup needs at least one element");
    }
    std::vector<element_index> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw Error(ErrorKind::non_square,
                    "row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                        + " entries, expected " + std::to_string(n),
                    {i});
      }
      flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return from_flat(n, std::move(flat), std::move(labels));
  }

  Semigroup Semigroup::from_flat(std::size_t                n,
                                 std::vector<element_index> table,
                                 std::vector<std::string>   labels) {
    if (n == 0) {
      throw Error(ErrorKind::empty_table, "a semigroup needs at least one element");
    }
    if (table.size() != n * n) {
      throw Error(ErrorKind::non_square,
                  "table has " + std::to_string(table.size()) + " entries, expected "
                      + std::to_string(n * n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i * n + j] >= n) {
          throw Error(ErrorKind::index_out_of_range,
                      "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = "
                          + std::to_string(table[i * n + j]) + " is not in [0, "
                          + std::to_string(n) + ")",
                      {i, j});
        }
      }
    }
    if (!labels.empty()) {
      if (labels.size() != n) {
        throw Error(ErrorKind::bad_labels,
                    "expected " + std::to_string(n) + " labels, got "
                        + std::to_string(labels.size()));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!valid_label(labels[i])) {
          throw Error(ErrorKind::bad_labels,
                      "label " + std::to_string(i) + " is empty or contains whitespace",
                      {i});
        }
      }
    }
    if (auto bad = kernels::first_nonassociative_triple(n, table)) {
      auto [i, j, k] = *bad;
      throw Error(ErrorKind::non_associative,
                  "not associative at (i, j, k) = (" + std::to_string(i) + ", "
                      + std::to_string(j) + ", " + std::to_string(k) + "): ("
                      + std::to_string(i) + " * " + std::to_string(j) + ") * "
                      + std::to_string(k) + " != " + std::to_string(i) + " * ("
                      + std::to_string(j) + " * " + std::to_string(k) + ")",
                  {i, j, k});
    }

    Semigroup S;
    S._n      = n;
    S._table  = std::move(table);
    S._labels = std::move(labels);
    for (element_index z = 0; z < n && !S._zero; ++z) {
      bool ok = true;
      for (element_index x = 0; x < n && ok; ++x) {
        ok = S(z, x) == z && S(x, z) == z;
      }
      if (ok) {
        S._zero = z;
      }
    }
    for (element_index e = 0; e < n && !S._identity; ++e) {
      bool ok = true;
      for (element_index x = 0; x < n && ok; ++x) {
        ok = S(e, x) == x && S(x, e) == x;
      }
      if (ok) {
        S._identity = e;
      }
    }
    return S;
  }

  std::vector<std::vector<element_index>> Semigroup::rows() const {
    std::vector<std::vector<element_index>> out(_n);
    for (element_index i = 0; i < _n; ++i) {
      auto r = row(i);
      out[i].assign(r.begin(), r.end());
    }
    return out;
  }

  std::string Semigroup::label(element_index i) const {
    return _labels.empty() ? std::to_string(i) : _labels[i];
  }

  element_index Semigroup::power(element_index s, std::size_t k) const {
    if (k == 0) {
      throw Error(ErrorKind::invalid_parameter, "exponent must be at least 1");
    }
    element_index result = s;
    for (std::size_t i = 1; i < k; ++i) {
      result = (*this)(result, s);
    }
    return result;
  }

}  // namespace strata
