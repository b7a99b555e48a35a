// Error types shared by every module.
//
// Contract violations by the caller (bad tables, failed preconditions) raise
// strata::Error carrying an ErrorKind and, where one exists, a witness: the
// element indices that demonstrate the failure. A failed internal theorem
// check raises strata::InternalError instead; that always indicates a bug in
// this library and is never an expected outcome.

#ifndef STRATA_ERROR_HPP_
#define STRATA_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error, logic_error
#include <string>     // for string
#include <vector>     // for vector

namespace strata {

  enum class ErrorKind {
    empty_table,
    non_square,
    index_out_of_range,
    non_associative,
    bad_labels,
    empty_generators,
    not_an_ideal,
    order_too_large,
    not_a_congruence,
    not_a_subsemigroup,
    not_idempotent,
    not_conditionally_completely_regular,
    not_group_bound,
    no_zero_in_source,
    law_violation,
    map_incomplete,
    not_strict,
    not_weakly_reductive,
    not_clifford,
    group_union_not_ideal,
    invalid_linking,
    invalid_parameter,
    parse,
    io
  };

  char const* to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& msg,
          std::vector<std::size_t> witness = {});

    ErrorKind kind() const noexcept {
      return _kind;
    }

    // Element indices demonstrating the failure, e.g. the (i, j, k) triple
    // for non_associative or the interchangeable pair for
    // not_weakly_reductive. Empty when the error has no natural witness.
    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    ErrorKind                _kind;
    std::vector<std::size_t> _witness;
  };

  // Malformed input text. line() is 1-based; 0 means "end of input".
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& msg);

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  class InternalError : public std::logic_error {
   public:
    explicit InternalError(std::string const& msg)
        : std::logic_error("internal theorem violation: " + msg) {}
  };

}  // namespace strata

#endif  // STRATA_ERROR_HPP_
