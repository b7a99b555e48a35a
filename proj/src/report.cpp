#include "strata/report.hpp"

#include <algorithm>  // for max
#include <sstream>    // for ostringstream

#include "strata/core.hpp"   // for is_commutative, is_weakly_reductive
#include "strata/error.hpp"  // for Error
#include "strata/green.hpp"  // for GreenStructure

namespace strata {

  using nlohmann::json;

  AnalysisBundle analyze(Semigroup const& S) {
    GreenStructure const G(S);
    GreenSummary         g;
    g.R           = G.R();
    g.L           = G.L();
    g.H           = G.H();
    g.D           = G.D();
    g.J           = G.J();
    g.idempotents = idempotents(S);
    g.regular     = regular_elements(S);
    for (std::size_t a = 0; a < G.J().number_of_classes(); ++a) {
      for (std::size_t b = 0; b < G.J().number_of_classes(); ++b) {
        if (a != b && G.j_class_leq(a, b)) {
          g.j_order.emplace_back(a, b);
        }
      }
    }
    g.e_dense           = is_e_dense(S);
    g.group_bound       = is_group_bound(S, G);
    g.ccr_witness       = ccr_witness(S, G);
    g.ccr               = !g.ccr_witness;
    g.completely_simple = is_completely_simple(S);
    g.clifford          = is_clifford(S);

    auto const            c = classify(S);
    ClassificationSummary cls{is_commutative(S), is_band(S),      is_semilattice(S),
                              is_group(S),       is_weakly_reductive(S), c.nil_stratified,
                              c.quotient_nilpotency_index};

    std::optional<DecompositionReport> decomposition;
    if (g.ccr) {
      decomposition = verify_rho(S);
    }
    return AnalysisBundle{S, std::move(g), stratify(S), cls, std::move(decomposition)};
  }

  bool operator==(StratificationReport const& a, StratificationReport const& b) {
    return a.base == b.base && a.layers == b.layers && a.height == b.height
           && a.depth_of == b.depth_of && a.flags == b.flags && a.notes == b.notes;
  }

  bool operator==(Component const& a, Component const& b) {
    return a.elements == b.elements && a.regular_part == b.regular_part
           && a.base == b.base && a.height == b.height
           && a.is_archimedean == b.is_archimedean && a.is_e_dense == b.is_e_dense
           && a.completely_simple_base == b.completely_simple_base
           && a.finitely_stratified == b.finitely_stratified;
  }

  bool operator==(DecompositionReport const& a, DecompositionReport const& b) {
    return a.rho == b.rho && a.quotient == b.quotient && a.components == b.components;
  }

  bool operator==(AnalysisBundle const& a, AnalysisBundle const& b) {
    return a.semigroup == b.semigroup && a.semigroup.labels() == b.semigroup.labels()
           && a.green == b.green && a.stratification == b.stratification
           && a.classification == b.classification && a.decomposition == b.decomposition;
  }

  ////////////////////////////////////////////////////////////////////////
  // To JSON
  ////////////////////////////////////////////////////////////////////////

  namespace {
    json to_json(ElementSet const& A) {
      return A.to_vector();
    }

    json to_json(Partition const& p) {
      json out = json::array();
      for (std::size_t k = 0; k < p.number_of_classes(); ++k) {
        out.push_back(p.members(k));
      }
      return out;
    }

    json table_json(Semigroup const& S) {
      return S.rows();
    }

    json optional_index(std::optional<element_index> x) {
      return x ? json(*x) : json(nullptr);
    }
  }  // namespace

  json to_json(Semigroup const& S) {
    return {{"order", S.size()},
            {"table", table_json(S)},
            {"labels", S.has_labels() ? json(S.labels()) : json(nullptr)},
            {"zero", optional_index(S.zero())},
            {"identity", optional_index(S.identity())}};
  }

  json to_json(StratificationReport const& R) {
    json layers = json::array(), depth = json::array();
    for (auto const& layer : R.layers) {
      layers.push_back(to_json(layer));
    }
    for (auto const& d : R.depth_of) {
      depth.push_back(d.in_base() ? json("base") : json(d.layer_index()));
    }
    return {{"base", to_json(R.base)},
            {"layers", layers},
            {"height", R.height},
            {"depth", depth},
            {"grillet_stratified", R.flags.grillet_stratified},
            {"globally_idempotent", R.flags.globally_idempotent},
            {"base_equals_reg", R.flags.base_equals_reg},
            {"notes", R.notes}};
  }

  json to_json(DecompositionReport const& R) {
    json components = json::array(), order = json::array();
    for (auto const& c : R.components) {
      components.push_back({{"elements", to_json(c.elements)},
                            {"regular_part", to_json(c.regular_part)},
                            {"base", to_json(c.base)},
                            {"height", c.height},
                            {"is_archimedean", c.is_archimedean},
                            {"is_e_dense", c.is_e_dense},
                            {"completely_simple_base", c.completely_simple_base},
                            {"finitely_stratified", c.finitely_stratified}});
    }
    for (std::size_t a = 0; a < R.components.size(); ++a) {
      for (std::size_t b = 0; b < R.components.size(); ++b) {
        if (a != b && R.leq(a, b)) {
          order.push_back({a, b});
        }
      }
    }
    return {{"rho_classes", to_json(R.rho)},
            {"quotient_table", table_json(R.quotient)},
            {"quotient_order", order},
            {"components", components}};
  }

  json to_json(AnalysisBundle const& B) {
    auto const& g = B.green;
    json        j_order = json::array();
    for (auto [a, b] : g.j_order) {
      j_order.push_back({a, b});
    }
    auto const& c = B.classification;
    return {
        {"schema_version", schema_version},
        {"semigroup", to_json(B.semigroup)},
        {"green",
         {{"R", to_json(g.R)},
          {"L", to_json(g.L)},
          {"H", to_json(g.H)},
          {"D", to_json(g.D)},
          {"J", to_json(g.J)},
          {"j_order", j_order},
          {"idempotents", to_json(g.idempotents)},
          {"regular", to_json(g.regular)},
          {"e_dense", g.e_dense},
          {"group_bound", g.group_bound},
          {"conditionally_completely_regular", g.ccr},
          {"ccr_witness", g.ccr_witness ? to_json(*g.ccr_witness) : json(nullptr)},
          {"completely_simple", g.completely_simple},
          {"clifford", g.clifford}}},
        {"stratification", to_json(B.stratification)},
        {"classification",
         {{"commutative", c.commutative},
          {"band", c.band},
          {"semilattice", c.semilattice},
          {"group", c.group},
          {"weakly_reductive", c.weakly_reductive},
          {"nil_stratified", c.nil_stratified},
          {"quotient_nilpotency_index", c.quotient_nilpotency_index}}},
        {"decomposition", B.decomposition ? to_json(*B.decomposition) : json(nullptr)}};
  }

  json to_json(verify::Report const& R) {
    auto violations = [](std::vector<verify::Violation> const& list) {
      json out = json::array();
      for (auto const& v : list) {
        out.push_back({{"suite", v.suite},
                       {"property", v.property},
                       {"detail", v.detail},
                       {"order", v.order},
                       {"table", v.table}});
      }
      return out;
    };
    return {{"schema_version", schema_version},
            {"ok", R.ok()},
            {"stats",
             {{"tables", R.stats.tables},
              {"ccr", R.stats.ccr},
              {"congruences", R.stats.congruences},
              {"band_equality_cases", R.stats.band_equality_cases},
              {"extensions", R.stats.extensions},
              {"products", R.stats.products}}},
            {"violations", violations(R.violations)},
            {"observations", violations(R.observations)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // From JSON
  ////////////////////////////////////////////////////////////////////////

  namespace {
    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::parse, std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    template <typename T>
    T get(json const& j, char const* key) {
      try {
        return field(j, key).get<T>();
      } catch (json::exception const& e) {
        throw Error(ErrorKind::parse, std::string("field '") + key + "': " + e.what());
      }
    }

    ElementSet set_from(json const& j, std::size_t n) {
      if (!j.is_array()) {
        throw Error(ErrorKind::parse, "expected an array of element indices");
      }
      ElementSet out(n);
      for (auto const& x : j) {
        auto const v = x.get<std::size_t>();
        if (v >= n) {
          throw Error(ErrorKind::parse, "element index out of range");
        }
        out.insert(static_cast<element_index>(v));
      }
      return out;
    }

    Partition partition_from(json const& j, std::size_t n) {
      std::vector<ElementSet> classes;
      for (auto const& c : j) {
        classes.push_back(set_from(c, n));
      }
      return Partition::from_classes(n, classes);
    }

    template <typename F>
    auto guarded(F&& f) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw Error(ErrorKind::parse, e.what());
      }
    }

    Semigroup table_from(json const& rows, std::vector<std::string> labels = {}) {
      return Semigroup::from_table(rows.get<std::vector<std::vector<element_index>>>(),
                                   std::move(labels));
    }
  }  // namespace

  Semigroup semigroup_from_json(json const& j) {
    return guarded([&] {
      std::vector<std::string> labels;
      if (!field(j, "labels").is_null()) {
        labels = get<std::vector<std::string>>(j, "labels");
      }
      auto S = table_from(field(j, "table"), std::move(labels));
      if (S.size() != get<std::size_t>(j, "order")) {
        throw Error(ErrorKind::parse, "order does not match the table");
      }
      return S;
    });
  }

  StratificationReport stratification_from_json(json const& j) {
    return guarded([&] {
      auto const           depth = field(j, "depth");
      std::size_t const    n     = depth.size();
      StratificationReport R;
      R.base   = set_from(field(j, "base"), n);
      R.height = get<std::size_t>(j, "height");
      for (auto const& layer : field(j, "layers")) {
        R.layers.push_back(set_from(layer, n));
      }
      for (auto const& d : depth) {
        R.depth_of.push_back(d.is_string() ? Depth::base() : Depth::layer(d.get<std::size_t>()));
      }
      R.flags = {get<bool>(j, "grillet_stratified"), get<bool>(j, "globally_idempotent"),
                 get<bool>(j, "base_equals_reg")};
      R.notes = get<std::vector<std::string>>(j, "notes");
      return R;
    });
  }

  DecompositionReport decomposition_from_json(json const& j) {
    return guarded([&] {
      std::size_t n = 0;
      for (auto const& c : field(j, "rho_classes")) {
        n += c.size();
      }
      DecompositionReport R{partition_from(field(j, "rho_classes"), n),
                            table_from(field(j, "quotient_table")),
                            {}};
      for (auto const& c : field(j, "components")) {
        Component out;
        out.elements               = set_from(field(c, "elements"), n);
        out.regular_part           = set_from(field(c, "regular_part"), n);
        out.base                   = set_from(field(c, "base"), n);
        out.height                 = get<std::size_t>(c, "height");
        out.is_archimedean         = get<bool>(c, "is_archimedean");
        out.is_e_dense             = get<bool>(c, "is_e_dense");
        out.completely_simple_base = get<bool>(c, "completely_simple_base");
        out.finitely_stratified    = get<bool>(c, "finitely_stratified");
        R.components.push_back(std::move(out));
      }
      return R;
    });
  }

  AnalysisBundle bundle_from_json(json const& j) {
    return guarded([&] {
      if (get<std::string>(j, "schema_version") != schema_version) {
        throw Error(ErrorKind::parse, "unsupported schema_version");
      }
      auto              S = semigroup_from_json(field(j, "semigroup"));
      std::size_t const n = S.size();
      auto const&       g = field(j, "green");
      GreenSummary      green;
      green.R           = partition_from(field(g, "R"), n);
      green.L           = partition_from(field(g, "L"), n);
      green.H           = partition_from(field(g, "H"), n);
      green.D           = partition_from(field(g, "D"), n);
      green.J           = partition_from(field(g, "J"), n);
      green.j_order     = get<std::vector<std::pair<std::size_t, std::size_t>>>(g, "j_order");
      green.idempotents = set_from(field(g, "idempotents"), n);
      green.regular     = set_from(field(g, "regular"), n);
      green.e_dense     = get<bool>(g, "e_dense");
      green.group_bound = get<bool>(g, "group_bound");
      green.ccr         = get<bool>(g, "conditionally_completely_regular");
      if (!field(g, "ccr_witness").is_null()) {
        green.ccr_witness = set_from(field(g, "ccr_witness"), n);
      }
      green.completely_simple = get<bool>(g, "completely_simple");
      green.clifford          = get<bool>(g, "clifford");

      auto const&           c = field(j, "classification");
      ClassificationSummary cls{get<bool>(c, "commutative"),
                                get<bool>(c, "band"),
                                get<bool>(c, "semilattice"),
                                get<bool>(c, "group"),
                                get<bool>(c, "weakly_reductive"),
                                get<bool>(c, "nil_stratified"),
                                get<std::size_t>(c, "quotient_nilpotency_index")};
      std::optional<DecompositionReport> decomposition;
      if (!field(j, "decomposition").is_null()) {
        decomposition = decomposition_from_json(field(j, "decomposition"));
      }
      return AnalysisBundle{std::move(S), std::move(green),
                            stratification_from_json(field(j, "stratification")), cls,
                            std::move(decomposition)};
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string names(Semigroup const& S, ElementSet const& A) {
      std::string out = "{";
      for (auto x : A) {
        out += (out.size() > 1 ? ", " : "") + S.label(x);
      }
      return out + "}";
    }

    char const* yes_no(bool b) {
      return b ? "true" : "false";
    }
  }  // namespace

  std::string render_egg_box(Semigroup const& S, GreenSummary const& G) {
    std::ostringstream out;
    for (std::size_t d = 0; d < G.D.number_of_classes(); ++d) {
      auto const&              members = G.D.members(d);
      std::vector<std::size_t> rows, cols;
      for (auto x : members) {
        auto const r = G.R.class_of(x), l = G.L.class_of(x);
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) {
          rows.push_back(r);
        }
        if (std::find(cols.begin(), cols.end(), l) == cols.end()) {
          cols.push_back(l);
        }
      }
      std::vector<std::vector<std::string>> cells(rows.size(),
                                                  std::vector<std::string>(cols.size()));
      std::size_t width = 1;
      for (auto x : members) {
        auto const i = std::find(rows.begin(), rows.end(), G.R.class_of(x)) - rows.begin();
        auto const k = std::find(cols.begin(), cols.end(), G.L.class_of(x)) - cols.begin();
        auto&      cell = cells[i][k];
        cell += (cell.empty() ? "" : " ") + S.label(x)
                + (G.idempotents.contains(x) ? "*" : "");
        width = std::max(width, cell.size());
      }
      std::string rule = "+";
      for (std::size_t k = 0; k < cols.size(); ++k) {
        rule += std::string(width + 2, '-') + "+";
      }
      out << "D-class " << d << '\n' << rule << '\n';
      for (auto const& row : cells) {
        out << '|';
        for (auto const& cell : row) {
          out << ' ' << cell << std::string(width - cell.size(), ' ') << " |";
        }
        out << '\n' << rule << '\n';
      }
    }
    return out.str();
  }

  std::string render_hasse(DecompositionReport const& R) {
    std::size_t const        k = R.components.size();
    std::vector<std::size_t> level(k, 0);
    // Longest chain below each element; k passes suffice.
    for (std::size_t pass = 0; pass < k; ++pass) {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (a != b && R.leq(b, a)) {
            level[a] = std::max(level[a], level[b] + 1);
          }
        }
      }
    }
    std::size_t const  top = k == 0 ? 0 : *std::max_element(level.begin(), level.end());
    std::ostringstream out;
    for (std::size_t l = top + 1; l-- > 0;) {
      std::string nodes, edges;
      for (std::size_t a = 0; a < k; ++a) {
        if (level[a] != l) {
          continue;
        }
        nodes += (nodes.empty() ? "" : "   ") + ("[" + std::to_string(a) + "]");
        for (std::size_t b = 0; b < k; ++b) {
          // b is covered by a.
          bool covers = a != b && R.leq(b, a);
          for (std::size_t c = 0; c < k && covers; ++c) {
            covers = !(c != a && c != b && R.leq(b, c) && R.leq(c, a));
          }
          if (covers) {
            edges += (edges.empty() ? "" : "  ") + std::to_string(a) + " > "
                     + std::to_string(b);
          }
        }
      }
      out << "  " << nodes << '\n';
      if (!edges.empty()) {
        out << "   |  " << edges << '\n';
      }
    }
    return out.str();
  }

  std::string render_text(Semigroup const& S, DecompositionReport const& R) {
    std::ostringstream out;
    out << "rho-classes: " << R.components.size() << '\n';
    for (std::size_t k = 0; k < R.components.size(); ++k) {
      auto const& c = R.components[k];
      out << "  [" << k << "] " << names(S, c.elements) << "  regular " << names(S, c.regular_part)
          << "  base " << names(S, c.base) << "  height " << c.height
          << "  archimedean " << yes_no(c.is_archimedean) << "  e-dense "
          << yes_no(c.is_e_dense) << "  completely simple base "
          << yes_no(c.completely_simple_base) << '\n';
    }
    out << "semilattice S / rho (top first):\n" << render_hasse(R);
    return out.str();
  }

  std::string render_text(AnalysisBundle const& B) {
    auto const&        S = B.semigroup;
    auto const&        g = B.green;
    auto const&        R = B.stratification;
    std::ostringstream out;
    out << "order: " << S.size() << '\n'
        << "zero: " << (S.zero() ? S.label(*S.zero()) : "none") << '\n'
        << "identity: " << (S.identity() ? S.label(*S.identity()) : "none") << "\n\n";

    out << "Green structure: " << g.D.number_of_classes() << " D-classes, "
        << g.H.number_of_classes() << " H-classes (* marks idempotents)\n"
        << render_egg_box(S, g);
    out << "idempotents: " << names(S, g.idempotents) << '\n'
        << "regular: " << names(S, g.regular) << '\n'
        << "E-dense: " << yes_no(g.e_dense) << '\n'
        << "group-bound: " << yes_no(g.group_bound) << '\n'
        << "conditionally completely regular: " << yes_no(g.ccr);
    if (g.ccr_witness) {
      out << " (witness H-class " << names(S, *g.ccr_witness) << ")";
    }
    out << '\n'
        << "completely simple: " << yes_no(g.completely_simple) << '\n'
        << "Clifford: " << yes_no(g.clifford) << "\n\n";

    out << "height: " << R.height << '\n' << "base: " << names(S, R.base) << '\n';
    for (std::size_t m = 1; m <= R.layers.size(); ++m) {
      out << "layer " << m << ": " << names(S, R.layers[m - 1]) << '\n';
    }
    out << "grillet_stratified: " << yes_no(R.flags.grillet_stratified) << '\n'
        << "globally_idempotent: " << yes_no(R.flags.globally_idempotent) << '\n'
        << "base_equals_reg: " << yes_no(R.flags.base_equals_reg) << '\n';
    for (auto const& note : R.notes) {
      out << "note: " << note << '\n';
    }
    auto const& c = B.classification;
    out << "nil-stratified: " << yes_no(c.nil_stratified)
        << "\nnilpotency index of S / Base(S): " << c.quotient_nilpotency_index << '\n'
        << "commutative: " << yes_no(c.commutative) << "\nband: " << yes_no(c.band)
        << "\nsemilattice: " << yes_no(c.semilattice) << "\ngroup: " << yes_no(c.group)
        << "\nweakly reductive: " << yes_no(c.weakly_reductive) << '\n';

    if (B.decomposition) {
      out << '\n' << render_text(S, *B.decomposition);
    }
    return out.str();
  }

}  // namespace strata
