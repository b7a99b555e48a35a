#include "strata/io.hpp"

#include <charconv>  // for from_chars
#include <fstream>   // for ifstream, ofstream
#include <istream>   // for istream
#include <ostream>   // for ostream
#include <sstream>   // for istringstream, ostringstream

#include "strata/error.hpp"  // for Error, ParseError
#include "strata/zoo.hpp"    // for named_fixture

namespace strata {

  namespace {
    struct Lines {
      std::vector<std::string> text;

      explicit Lines(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') {
            line.pop_back();
          }
          text.push_back(std::move(line));
        }
      }
    };

    std::vector<std::string> tokens(std::string const& line) {
      std::istringstream       in(line);
      std::vector<std::string> out;
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    bool blank(std::string const& line) {
      return tokens(line).empty();
    }

    std::size_t parse_index(std::string const& tok, std::size_t line) {
      std::size_t value = 0;
      auto const [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
      }
      return value;
    }

    void open_failed(std::filesystem::path const& path, char const* what) {
      throw Error(ErrorKind::io, std::string("cannot ") + what + " '" + path.string() + "'");
    }
  }  // namespace

  Semigroup parse_sgt(std::istream& in) {
    Lines const lines(in);
    auto const& L = lines.text;
    if (L.empty() || blank(L[0])) {
      throw ParseError(L.empty() ? 0 : 1, "expected the order n on the first line");
    }
    auto const head = tokens(L[0]);
    if (head.size() != 1) {
      throw ParseError(1, "expected a single integer n on the first line");
    }
    std::size_t const n = parse_index(head[0], 1);
    if (n == 0) {
      throw ParseError(1, "the order must be positive");
    }
    std::vector<std::vector<element_index>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t const line = i + 2;
      if (line > L.size()) {
        throw ParseError(0, "expected " + std::to_string(n) + " table rows, found "
                                + std::to_string(i));
      }
      auto const tok = tokens(L[line - 1]);
      if (tok.size() != n) {
        throw ParseError(line, "row " + std::to_string(i) + " has " + std::to_string(tok.size())
                                   + " entries, expected " + std::to_string(n));
      }
      std::vector<element_index> row;
      for (auto const& t : tok) {
        auto const v = parse_index(t, line);
        if (v >= n) {
          throw Error(ErrorKind::index_out_of_range,
                      "line " + std::to_string(line) + ": entry " + t + " is not below "
                          + std::to_string(n),
                      {i, row.size()});
        }
        row.push_back(static_cast<element_index>(v));
      }
      rows.push_back(std::move(row));
    }
    std::vector<std::string> labels;
    std::size_t              next = n + 1;
    if (next < L.size() && !blank(L[next])) {
      labels = tokens(L[next]);
      if (labels.size() != n) {
        throw ParseError(next + 1, "expected " + std::to_string(n) + " labels, got "
                                       + std::to_string(labels.size()));
      }
      ++next;
    }
    for (; next < L.size(); ++next) {
      if (!blank(L[next])) {
        throw ParseError(next + 1, "unexpected trailing content");
      }
    }
    return Semigroup::from_table(rows, std::move(labels));
  }

  Semigroup parse_sgt(std::string const& text) {
    std::istringstream in(text);
    return parse_sgt(in);
  }

  Semigroup read_sgt(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      open_failed(path, "open");
    }
    return parse_sgt(in);
  }

  void write_sgt(std::ostream& out, Semigroup const& S) {
    out << S.size() << '\n';
    for (element_index i = 0; i < S.size(); ++i) {
      for (element_index j = 0; j < S.size(); ++j) {
        out << (j == 0 ? "" : " ") << S(i, j);
      }
      out << '\n';
    }
    if (S.has_labels()) {
      for (element_index i = 0; i < S.size(); ++i) {
        out << (i == 0 ? "" : " ") << S.label(i);
      }
      out << '\n';
    }
  }

  std::string to_sgt(Semigroup const& S) {
    std::ostringstream out;
    write_sgt(out, S);
    return out.str();
  }

  void write_sgt(std::filesystem::path const& path, Semigroup const& S) {
    std::ofstream out(path);
    if (!out) {
      open_failed(path, "write");
    }
    write_sgt(out, S);
  }

  PhmFile parse_phm(std::istream& in) {
    Lines const lines(in);
    auto const& L = lines.text;
    PhmFile     phm;
    for (std::size_t k = 0; k < 2; ++k) {
      if (k >= L.size()) {
        throw ParseError(0, k == 0 ? "missing reference to T" : "missing reference to S");
      }
      auto const tok = tokens(L[k]);
      if (tok.size() != 1) {
        throw ParseError(k + 1, "expected a single path or zoo: tag");
      }
      (k == 0 ? phm.t_ref : phm.s_ref) = tok[0];
    }
    for (std::size_t k = 2; k < L.size(); ++k) {
      auto const tok = tokens(L[k]);
      if (tok.empty()) {
        continue;
      }
      if (tok.size() != 2) {
        throw ParseError(k + 1, "expected a pair 't_index s_index'");
      }
      phm.pairs.emplace_back(static_cast<element_index>(parse_index(tok[0], k + 1)),
                             static_cast<element_index>(parse_index(tok[1], k + 1)));
      phm.lines.push_back(k + 1);
    }
    return phm;
  }

  PhmFile parse_phm(std::string const& text) {
    std::istringstream in(text);
    return parse_phm(in);
  }

  void write_phm(std::ostream& out, PhmFile const& phm) {
    out << phm.t_ref << '\n' << phm.s_ref << '\n';
    for (auto const& [t, s] : phm.pairs) {
      out << t << ' ' << s << '\n';
    }
  }

  PhmFile to_phm(PartialHom const& phi, std::string t_ref, std::string s_ref) {
    PhmFile phm{std::move(t_ref), std::move(s_ref), {}, {}};
    for (element_index A = 0; A < phi.source().size(); ++A) {
      if (phi(A) != no_element) {
        phm.pairs.emplace_back(A, phi(A));
      }
    }
    return phm;
  }

  Semigroup resolve_reference(std::string const& ref, std::filesystem::path const& base_dir) {
    if (ref.rfind("zoo:", 0) == 0) {
      auto const               rest  = ref.substr(4);
      auto const               colon = rest.find(':');
      std::string const        name  = rest.substr(0, colon);
      std::vector<std::size_t> params;
      if (colon != std::string::npos) {
        std::istringstream in(rest.substr(colon + 1));
        std::string        item;
        while (std::getline(in, item, ',')) {
          params.push_back(parse_index(item, 0));
        }
      }
      return zoo::named_fixture(name, params);
    }
    std::filesystem::path p(ref);
    return read_sgt(p.is_absolute() ? p : base_dir / p);
  }

  PartialHom load_phm(PhmFile const& phm, std::filesystem::path const& base_dir) {
    auto T = resolve_reference(phm.t_ref, base_dir);
    auto S = resolve_reference(phm.s_ref, base_dir);
    std::vector<element_index> map(T.size(), no_element);
    for (std::size_t k = 0; k < phm.pairs.size(); ++k) {
      auto const [t, s] = phm.pairs[k];
      std::size_t const line = k < phm.lines.size() ? phm.lines[k] : k + 3;
      if (t >= T.size()) {
        throw ParseError(line, std::to_string(t) + " is not an element of T");
      }
      if (T.zero() && t == *T.zero()) {
        throw ParseError(line, "the zero of T has no image");
      }
      if (map[t] != no_element) {
        throw ParseError(line, "element " + std::to_string(t) + " is mapped twice");
      }
      map[t] = s;
    }
    return validate_partial_hom(std::move(T), std::move(S), std::move(map));
  }

  PartialHom read_phm(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      open_failed(path, "open");
    }
    return load_phm(parse_phm(in), path.parent_path());
  }

}  // namespace strata
