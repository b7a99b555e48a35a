// Text formats.
//
// .sgt: line 1 is n; the next n lines hold n whitespace-separated 0-based
// indices each (row i is the left factor i); an optional further line holds n
// labels. Blank lines may follow; anything else is rejected.
//
// .phm: line 1 names T, line 2 names S; each following line is a pair
// "t_index s_index", one per nonzero element of T. A name is either a path to
// an .sgt file, relative to the .phm file, or a tag zoo:<name>[:p1,p2,...].

#ifndef STRATA_IO_HPP_
#define STRATA_IO_HPP_

#include <filesystem>  // for path
#include <iosfwd>      // for istream, ostream
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "element_set.hpp"  // for element_index
#include "extend.hpp"       // for PartialHom
#include "semigroup.hpp"    // for Semigroup

namespace strata {

  // Throws ParseError for malformed text and the Semigroup validation errors
  // (index_out_of_range, non_associative, bad_labels) for well-formed text.
  Semigroup parse_sgt(std::istream& in);
  Semigroup parse_sgt(std::string const& text);

  // Throws Error(io) if the file cannot be opened.
  Semigroup read_sgt(std::filesystem::path const& path);

  void        write_sgt(std::ostream& out, Semigroup const& S);
  std::string to_sgt(Semigroup const& S);
  void        write_sgt(std::filesystem::path const& path, Semigroup const& S);

  struct PhmFile {
    std::string                                          t_ref;
    std::string                                          s_ref;
    std::vector<std::pair<element_index, element_index>> pairs;
    std::vector<std::size_t>                             lines;  // of each pair, when parsed
  };

  PhmFile parse_phm(std::istream& in);
  PhmFile parse_phm(std::string const& text);

  void write_phm(std::ostream& out, PhmFile const& phm);

  // The .phm pairs for phi, with the given references.
  PhmFile to_phm(PartialHom const& phi, std::string t_ref, std::string s_ref);

  // A zoo tag or a path relative to base_dir.
  Semigroup resolve_reference(std::string const&           ref,
                              std::filesystem::path const& base_dir);

  // Reads, resolves and validates. Pairs at the zero of T or repeated
  // indices are parse errors; a missing element is map_incomplete.
  PartialHom read_phm(std::filesystem::path const& path);
  PartialHom load_phm(PhmFile const& phm, std::filesystem::path const& base_dir);

}  // namespace strata

#endif  // STRATA_IO_HPP_
