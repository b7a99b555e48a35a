#include "strata/error.hpp"

#include <utility>  // for move

namespace strata {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::empty_table:
        return "EmptyTable";
      case ErrorKind::non_square:
        return "NonSquare";
      case ErrorKind::index_out_of_range:
        return "IndexOutOfRange";
      case ErrorKind::non_associative:
        return "NonAssociative";
      case ErrorKind::bad_labels:
        return "BadLabels";
      case ErrorKind::empty_generators:
        return "EmptyGenerators";
      case ErrorKind::not_an_ideal:
        return "NotAnIdeal";
      case ErrorKind::order_too_large:
        return "OrderTooLarge";
      case ErrorKind::not_a_congruence:
        return "NotACongruence";
      case ErrorKind::not_a_subsemigroup:
        return "NotASubsemigroup";
      case ErrorKind::not_idempotent:
        return "NotIdempotent";
      case ErrorKind::not_conditionally_completely_regular:
        return "NotConditionallyCompletelyRegular";
      case ErrorKind::not_group_bound:
        return "NotGroupBound";
      case ErrorKind::no_zero_in_source:
        return "NoZeroInSource";
      case ErrorKind::law_violation:
        return "LawViolation";
      case ErrorKind::map_incomplete:
        return "MapIncomplete";
      case ErrorKind::not_strict:
        return "NotStrict";
      case ErrorKind::not_weakly_reductive:
        return "NotWeaklyReductive";
      case ErrorKind::not_clifford:
        return "NotClifford";
      case ErrorKind::group_union_not_ideal:
        return "GroupUnionNotIdeal";
      case ErrorKind::invalid_linking:
        return "InvalidLinking";
      case ErrorKind::invalid_parameter:
        return "InvalidParameter";
      case ErrorKind::parse:
        return "ParseError";
      case ErrorKind::io:
        return "IoError";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& msg,
               std::vector<std::size_t> witness)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
        _kind(kind),
        _witness(std::move(witness)) {}

  ParseError::ParseError(std::size_t line, std::string const& msg)
      : Error(ErrorKind::parse,
              (line == 0 ? std::string("at end of input")
                         : "line " + std::to_string(line))
                  + ": " + msg,
              {line}),
        _line(line) {}

}  // namespace strata
