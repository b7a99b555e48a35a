#include "strata/verify.hpp"

#include <algorithm>  // for sort, unique, all_of
#include <exception>  // for exception
#include <string>     // for string, to_string

#include "strata/core.hpp"       // for PowerChain, enumerate_congruences
#include "strata/decompose.hpp"  // for verify_rho, kje_partition
#include "strata/error.hpp"      // for Error
#include "strata/green.hpp"      // for GreenStructure
#include "strata/stratify.hpp"   // for stratify, classify
#include "strata/zoo.hpp"        // for enumerate_associative, fixtures

namespace strata::verify {

  namespace {
    std::string str(ElementSet const& A) {
      return A.to_string();
    }

    std::string str(std::initializer_list<std::size_t> xs) {
      std::string s = "(";
      for (auto x : xs) {
        s += (s.size() > 1 ? ", " : "") + std::to_string(x);
      }
      return s + ")";
    }

    struct Recorder {
      Semigroup const& S;
      Report&          out;
      char const*      suite;

      void fail(std::string property, std::string detail = {}) const {
        out.violations.push_back(
            {S.size(), S.flat_table(), suite, std::move(property), std::move(detail)});
      }

      void check(bool ok, std::string property, std::string detail = {}) const {
        if (!ok) {
          fail(std::move(property), std::move(detail));
        }
      }
    };

    // Written independently of core's congruence test.
    bool compatible(Semigroup const& S, Partition const& p) {
      for (element_index a = 0; a < S.size(); ++a) {
        for (element_index b = a + 1; b < S.size(); ++b) {
          if (!p.same_class(a, b)) {
            continue;
          }
          for (element_index x = 0; x < S.size(); ++x) {
            if (!p.same_class(S(x, a), S(x, b)) || !p.same_class(S(a, x), S(b, x))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool has_identity_on(Semigroup const& S, ElementSet const& A) {
      for (auto e : A) {
        bool ok = true;
        for (auto a : A) {
          if (S(e, a) != a || S(a, e) != a) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return true;
        }
      }
      return false;
    }

    ElementSet regular_within(Semigroup const& S, ElementSet const& A) {
      auto const sub = subsemigroup(S, A);
      return image(sub.embedding, regular_elements(sub.semigroup), S.size());
    }

    ElementSet base_within(Semigroup const& S, ElementSet const& A) {
      auto const sub = subsemigroup(S, A);
      return image(sub.embedding, PowerChain(sub.semigroup).stable_set(), S.size());
    }

    // Congruences whose quotient is a semilattice.
    std::vector<Partition> semilattice_congruences(Semigroup const& S) {
      std::vector<Partition> out;
      for (auto& p : enumerate_congruences(S)) {
        if (is_semilattice(quotient_by_congruence(S, p).semigroup)) {
          out.push_back(std::move(p));
        }
      }
      return out;
    }

    constexpr std::size_t congruence_cap = 6;
  }  // namespace

  Report& Report::operator+=(Report const& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    observations.insert(
        observations.end(), other.observations.begin(), other.observations.end());
    stats.tables += other.stats.tables;
    stats.ccr += other.stats.ccr;
    stats.congruences += other.stats.congruences;
    stats.band_equality_cases += other.stats.band_equality_cases;
    stats.extensions += other.stats.extensions;
    stats.products += other.stats.products;
    return *this;
  }

  void Report::normalize() {
    for (auto* list : {&violations, &observations}) {
      std::sort(list->begin(), list->end());
      list->erase(std::unique(list->begin(), list->end()), list->end());
    }
  }

  Semigroup table_of(Violation const& v) {
    return Semigroup::from_flat(v.order, v.table);
  }

  ////////////////////////////////////////////////////////////////////////
  // Stratification
  ////////////////////////////////////////////////////////////////////////

  void check_stratification(Semigroup const& S, Report& out) {
    Recorder const    r{S, out, "stratification"};
    std::size_t const n     = S.size();
    auto const        whole = ElementSet::full(n);
    auto const        R     = stratify(S);
    auto const&       base  = R.base;

    r.check(!base.empty(), "base nonempty");
    r.check(R.height >= 1 && R.height <= n, "height at most the order",
            std::to_string(R.height));
    r.check(power_set(S, R.height) == base && power_set(S, R.height + 1) == base,
            "base = S^h = S^(h+1)");
    if (R.height > 1) {
      r.check(power_set(S, R.height - 1) != base, "height is least");
    }
    PowerChain const chain(S);
    for (std::size_t m = 1; m <= R.height; ++m) {
      r.check(chain.power(m + 1).is_subset_of(chain.power(m)), "S^(m+1) within S^m",
              "m = " + std::to_string(m));
    }
    ElementSet covered = base;
    for (std::size_t m = 1; m <= R.layers.size(); ++m) {
      auto const& layer = R.layers[m - 1];
      r.check(!layer.intersects(covered), "layers disjoint", "m = " + std::to_string(m));
      covered |= layer;
      r.check(layer == (chain.power(m) - chain.power(m + 1)), "layer = S^m \\ S^(m+1)",
              "m = " + std::to_string(m));
      for (auto s : layer) {
        r.check(depth(S, s) == Depth::layer(m), "depth matches layer", str({s, m}));
      }
    }
    r.check(covered == whole, "base and layers cover S");

    for (element_index s = 0; s < n; ++s) {
      ElementSet const single(n, {s});
      auto const       Ss  = product_set(S, whole, single);
      auto const       sS  = product_set(S, single, whole);
      auto const       SsS = product_set(S, Ss, whole);
      if (Ss.contains(s) || sS.contains(s) || SsS.contains(s)) {
        r.check(base.contains(s), "s in Ss u sS u SsS implies s in Base", str({s}));
      }
    }

    auto const reg = regular_elements(S);
    auto const E   = idempotents(S);
    r.check(reg.is_subset_of(base), "Reg(S) within Base(S)", str(reg - base));
    r.check(E == (E & base), "E(S) = E(Base(S))");
    r.check(R.flags.base_equals_reg == (base == reg), "base_equals_reg flag");
    r.check(R.flags.globally_idempotent == (power_set(S, 2) == whole),
            "globally_idempotent flag");

    if (n <= 6) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        ElementSet A(n);
        for (element_index x = 0; x < n; ++x) {
          if (mask >> x & 1) {
            A.insert(x);
          }
        }
        if (is_subsemigroup(S, A) && has_identity_on(S, A)) {
          r.check(A.is_subset_of(base), "monoid subsemigroups lie in Base", str(A));
        }
      }
    } else {
      for (auto e : E) {
        for (element_index s = 0; s < n; ++s) {
          auto const A = closure(S, ElementSet(n, {e, s}));
          if (has_identity_on(S, A)) {
            r.check(A.is_subset_of(base), "monoid subsemigroups lie in Base", str(A));
          }
        }
      }
    }

    GreenStructure const G(S);
    for (element_index s = 0; s < n; ++s) {
      if (!base.contains(s)) {
        r.check(G.J().members(G.J().class_of(s)).size() == 1,
                "elements outside Base have singleton J-classes", str({s}));
      }
    }

    r.check(is_ideal(S, base), "Base(S) is an ideal");
    auto const q = rees_quotient(S, base);
    r.check(q.semigroup.size() == n - base.size() + 1, "Rees quotient order");
    r.check(q.semigroup.zero().has_value() && is_grillet_stratified(q.semigroup),
            "S / Base(S) is Grillet-stratified");
    r.check(power_set(S, R.height + 1) == base && product_set(S, base, base) == base,
            "Base is globally idempotent");

    r.check(is_periodic(S) && is_eventually_regular(S) && is_e_dense(S),
            "periodic, eventually regular and E-dense");
    if (!reg.empty() && is_subsemigroup(S, reg) && is_completely_simple(S, reg)) {
      r.check(base == reg, "completely simple Reg(S) is the base",
              str(base) + " vs " + str(reg));
    }

    auto const c = classify(S);
    r.check(c.height == R.height && c.nil_stratified
                && c.quotient_nilpotency_index == R.height,
            "classification agrees with the power chain");

    if (n <= congruence_cap) {
      for (auto const& p : enumerate_congruences(S, congruence_cap)) {
        ++out.stats.congruences;
        r.check(compatible(S, p), "enumerated congruence is compatible");
        auto const       Q = quotient_by_congruence(S, p);
        PowerChain const qchain(Q.semigroup);
        auto const       qn = Q.semigroup.size();
        for (std::size_t m = 1; m <= R.height + 1; ++m) {
          r.check(qchain.power(m) == image(Q.map, chain.power(m), qn),
                  "(S / sigma)^m = S^m / sigma", "m = " + std::to_string(m));
        }
        r.check(qchain.stable_set() == image(Q.map, base, qn),
                "Base(S / sigma) = Base(S) / sigma");
      }
    }
  }

  void check_product(Semigroup const& S, Semigroup const& T, Report& out) {
    ++out.stats.products;
    auto const       P = direct_product(S, T);
    Recorder const   r{P, out, "products"};
    PowerChain const cs(S), ct(T), cp(P);
    std::size_t const q = T.size();
    auto cross = [&](ElementSet const& A, ElementSet const& B) {
      ElementSet out(P.size());
      for (auto a : A) {
        for (auto b : B) {
          out.insert(static_cast<element_index>(a * q + b));
        }
      }
      return out;
    };
    for (std::size_t m = 1; m <= S.size() + T.size(); ++m) {
      r.check(cp.power(m) == cross(cs.power(m), ct.power(m)), "(S x T)^m = S^m x T^m",
              "m = " + std::to_string(m));
    }
    r.check(stratify(P).base == cross(cs.stable_set(), ct.stable_set()),
            "Base(S x T) = Base(S) x Base(T)");
  }

  ////////////////////////////////////////////////////////////////////////
  // Green
  ////////////////////////////////////////////////////////////////////////

  void check_green(Semigroup const& S, Report& out) {
    Recorder const       r{S, out, "green"};
    std::size_t const    n = S.size();
    GreenStructure const G(S);
    auto const           E   = idempotents(S);
    auto const           reg = regular_elements(S);
    bool const           ccr = is_conditionally_completely_regular(S, G);

    for (element_index a = 0; a < n; ++a) {
      for (element_index b = 0; b < n; ++b) {
        bool const same_h = G.H().same_class(a, b);
        bool const same_rl = G.R().same_class(a, b) && G.L().same_class(a, b);
        r.check(same_h == same_rl, "H = R meet L", str({a, b}));
      }
    }

    std::vector<ElementSet> W;
    for (element_index s = 0; s < n; ++s) {
      W.push_back(weak_inverses(S, s));
    }
    bool const band = is_subsemigroup(S, E) && is_band(subsemigroup(S, E).semigroup);
    for (element_index s = 0; s < n; ++s) {
      for (element_index t = 0; t < n; ++t) {
        auto const prod = product_set(S, W[t], W[s]);
        auto const& w   = W[S(s, t)];
        r.check(w.is_subset_of(prod), "W(st) within W(t)W(s)", str({s, t}));
        if (band) {
          ++out.stats.band_equality_cases;
          if (w != prod) {
            out.observations.push_back({n, S.flat_table(), "green",
                                        "W(st) = W(t)W(s) when E(S) is a band",
                                        str({s, t})});
          }
        }
      }
    }

    for (element_index s = 0; s < n; ++s) {
      for (auto x : W[s]) {
        r.check(G.j_leq(x, s), "weak inverses lie J-below", str({s, x}));
        auto const sx = S(s, x), xs = S(x, s);
        r.check(E.contains(sx) && E.contains(xs), "ss' and s's are idempotent", str({s, x}));
        r.check(G.L().same_class(sx, x) && G.R().same_class(x, xs), "ss' L s' R s's",
                str({s, x}));
      }
      if (ccr) {
        for (std::size_t h = 0; h < G.H().number_of_classes(); ++h) {
          r.check((W[s] & G.H().class_set(h)).size() <= 1,
                  "at most one weak inverse per H-class", str({s, h}));
        }
      }
      r.check(reg.contains(s) == !inverses(S, s).empty(), "regular iff V(s) nonempty",
              str({s}));
      r.check(reg.contains(s) == G.D().class_set(G.D().class_of(s)).intersects(E),
              "regular iff its D-class has an idempotent", str({s}));
    }

    auto const chars = e_dense_characterizations(S);
    r.check(chars[0] == chars[1] && chars[1] == chars[2] && chars[2] == chars[3]
                && chars[3] == is_e_dense(S),
            "E-dense characterizations agree");

    if (ccr) {
      for (std::size_t d = 0; d < G.D().number_of_classes(); ++d) {
        auto const D = G.D().class_set(d);
        if (D.intersects(reg)) {
          r.check(is_subsemigroup(S, D) && is_completely_simple(S, D),
                  "regular D-classes are completely simple subsemigroups", str(D));
        }
      }
    }
    if (is_e_dense(S) && is_subsemigroup(S, reg) && is_completely_simple(S, reg)) {
      r.check(is_ideal(S, reg), "completely simple Reg(S) of an E-dense S is an ideal");
    }

    r.check(is_group_bound(S, G), "finite semigroups are group-bound");
    std::vector<std::size_t> hits(n, 0);
    for (auto e : E) {
      for (auto s : k_class(S, G, e)) {
        ++hits[s];
      }
    }
    r.check(std::all_of(hits.begin(), hits.end(), [](auto h) { return h == 1; }),
            "the sets K_e partition S");
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  void check_decomposition(Semigroup const& S, Report& out) {
    GreenStructure const G(S);
    if (!is_conditionally_completely_regular(S, G)) {
      return;
    }
    Recorder const    r{S, out, "decomposition"};
    std::size_t const n      = S.size();
    auto const        report = verify_rho(S);
    auto const&       rho    = report.rho;
    auto const        reg    = regular_elements(S);
    auto const        E      = idempotents(S);

    r.check(compatible(S, rho), "rho is a congruence");
    r.check(is_semilattice(report.quotient), "S / rho is a semilattice");
    for (element_index s = 0; s < n; ++s) {
      r.check(rho.same_class(s, S(s, s)), "s rho s^2", str({s}));
      for (element_index t = 0; t < n; ++t) {
        r.check(rho.same_class(S(s, t), S(t, s)), "st rho ts", str({s, t}));
      }
    }

    std::vector<ElementSet> W;
    for (element_index s = 0; s < n; ++s) {
      W.push_back(weak_inverses(S, s));
    }
    for (std::size_t d = 0; d < G.D().number_of_classes(); ++d) {
      auto const D = G.D().class_set(d);
      for (element_index s = 0; s < n; ++s) {
        for (element_index t = 0; t < n; ++t) {
          r.check(W[S(s, t)].intersects(D) == (W[s].intersects(D) && W[t].intersects(D)),
                  "W(st) meets D iff W(s) and W(t) do", str({s, t, d}));
        }
      }
    }

    for (auto s : reg) {
      for (auto t : reg) {
        r.check(rho.same_class(s, t) == G.D().same_class(s, t), "rho = D on Reg(S)",
                str({s, t}));
      }
    }

    ElementSet no_weak(n);
    for (element_index s = 0; s < n; ++s) {
      if (W[s].empty()) {
        no_weak.insert(s);
      }
    }
    r.check(no_weak.empty() || is_ideal(S, no_weak), "E-dense or {s : W(s) empty} an ideal");

    for (std::size_t k = 0; k < report.components.size(); ++k) {
      auto const& c = report.components[k];
      r.check(c.is_e_dense == c.elements.intersects(reg),
              "a rho-class is E-dense iff it has a regular element", str(c.elements));
      r.check(c.is_archimedean && !c.regular_part.empty(),
              "components are Archimedean with regular elements", str(c.elements));
    }
    r.check(kje_partition(S, G) == rho, "K_{J_e} partition = rho");
    r.check(rho_partition_by_h_classes(S, G) == rho, "H-class form of rho = D-class form");

    for (auto e : E) {
      for (auto s : k_class(S, G, e)) {
        bool top = false;
        for (auto w : W[s]) {
          r.check(G.j_leq(w, e), "J_e bounds the weak inverses of s in K_e", str({s, e, w}));
          top = top || G.J().same_class(w, e);
        }
        r.check(top, "J_e contains a weak inverse of s in K_e", str({s, e}));
      }
    }

    for (element_index s = 0; s < n; ++s) {
      auto const alpha = rho.class_of(s);
      auto const where = weak_inverse_location(S, report, s);
      for (std::size_t beta = 0; beta < where.size(); ++beta) {
        bool const expected
            = report.components[beta].elements.intersects(reg) && report.leq(beta, alpha);
        r.check(where[beta] == expected,
                "W(s) meets S_beta iff S_beta has a regular element and beta <= alpha",
                str({s, beta}));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Master theorem and uniqueness
  ////////////////////////////////////////////////////////////////////////

  void check_master(Semigroup const& S, Report& out) {
    Recorder const       r{S, out, "master"};
    GreenStructure const G(S);
    if (is_conditionally_completely_regular(S, G)) {
      for (auto const& c : verify_rho(S).components) {
        r.check(c.finitely_stratified && c.completely_simple_base
                    && c.base == c.regular_part,
                "components are finitely stratified over a completely simple base "
                "equal to their regular part",
                str(c.elements));
      }
      return;
    }
    if (S.size() > congruence_cap) {
      return;
    }
    for (auto const& p : semilattice_congruences(S)) {
      ++out.stats.congruences;
      bool stratified = true, archimedean_regular = true;
      for (std::size_t k = 0; k < p.number_of_classes(); ++k) {
        auto const C    = p.class_set(k);
        auto const base = base_within(S, C);
        auto const reg  = regular_within(S, C);
        stratified = stratified && is_completely_simple(S, base) && base == reg;
        archimedean_regular = archimedean_regular && archimedean(S, C) && !reg.empty();
      }
      r.check(!stratified,
              "a non-CCR semigroup has no semilattice of stratified extensions of "
              "completely simple semigroups");
      r.check(!archimedean_regular,
              "a non-CCR semigroup has no semilattice of Archimedean semigroups with "
              "regular elements");
    }
  }

  void check_uniqueness(Semigroup const& S, Report& out) {
    GreenStructure const G(S);
    if (S.size() > congruence_cap || !is_group_bound(S, G)
        || !is_conditionally_completely_regular(S, G)) {
      return;
    }
    Recorder const r{S, out, "uniqueness"};
    auto const     rho = rho_partition(S, G);
    for (auto const& p : semilattice_congruences(S)) {
      ++out.stats.congruences;
      bool all_archimedean = true;
      for (std::size_t k = 0; k < p.number_of_classes(); ++k) {
        all_archimedean = all_archimedean && archimedean(S, p.class_set(k));
      }
      if (all_archimedean) {
        r.check(p == rho, "the Archimedean semilattice decomposition is rho");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Runners
  ////////////////////////////////////////////////////////////////////////

  void check_table(Semigroup const& S, unsigned suites, Report& out) {
    ++out.stats.tables;
    try {
      if (is_conditionally_completely_regular(S)) {
        ++out.stats.ccr;
      }
    } catch (std::exception const& e) {
      Recorder{S, out, "green"}.fail("exception", e.what());
    }
    struct Entry {
      Suite       bit;
      char const* name;
      void (*fn)(Semigroup const&, Report&);
    };
    static constexpr Entry entries[] = {
        {stratification, "stratification", check_stratification},
        {green, "green", check_green},
        {decomposition, "decomposition", check_decomposition},
        {master, "master", check_master},
        {uniqueness, "uniqueness", check_uniqueness},
    };
    for (auto const& entry : entries) {
      if (!(suites & entry.bit)) {
        continue;
      }
      try {
        entry.fn(S, out);
      } catch (std::exception const& e) {
        Recorder{S, out, entry.name}.fail("exception", e.what());
      }
    }
  }

  Report run_serial(std::vector<Semigroup> const& tables, unsigned suites) {
    Report out;
    for (auto const& S : tables) {
      check_table(S, suites, out);
    }
    out.normalize();
    return out;
  }

  Report run_parallel(std::vector<Semigroup> const& tables, unsigned suites) {
    Report out;
#pragma omp parallel
    {
      Report local;
#pragma omp for schedule(dynamic, 8) nowait
      for (std::size_t i = 0; i < tables.size(); ++i) {
        check_table(tables[i], suites, local);
      }
#pragma omp critical
      out += local;
    }
    out.normalize();
    return out;
  }

  namespace {
    void product_guarded(Semigroup const& S, Semigroup const& T, Report& out) {
      try {
        check_product(S, T, out);
      } catch (std::exception const& e) {
        Recorder{S, out, "products"}.fail("exception", e.what());
      }
    }
  }  // namespace

  Report run_products_serial(std::vector<Semigroup> const& left,
                             std::vector<Semigroup> const& right) {
    Report out;
    for (auto const& S : left) {
      for (auto const& T : right) {
        product_guarded(S, T, out);
      }
    }
    out.normalize();
    return out;
  }

  Report run_products_parallel(std::vector<Semigroup> const& left,
                               std::vector<Semigroup> const& right) {
    Report out;
#pragma omp parallel
    {
      Report local;
#pragma omp for schedule(dynamic, 4) nowait
      for (std::size_t i = 0; i < left.size(); ++i) {
        for (auto const& T : right) {
          product_guarded(left[i], T, local);
        }
      }
#pragma omp critical
      out += local;
    }
    out.normalize();
    return out;
  }

  Report run_products_for_order(std::size_t n, bool parallel) {
    auto run = [parallel](std::vector<Semigroup> const& a, std::vector<Semigroup> const& b) {
      return parallel ? run_products_parallel(a, b) : run_products_serial(a, b);
    };
    auto const tables = zoo::enumerate_associative(n);
    if (n <= 3) {
      return run(tables, tables);
    }
    Report out = run(tables, zoo::enumerate_associative(2));
    out += run(zoo::enumerate_associative(n, true), zoo::enumerate_associative(3, true));
    out.normalize();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Extensions
  ////////////////////////////////////////////////////////////////////////

  void check_extension(PartialHom const&                        phi,
                       std::optional<std::vector<std::uint32_t>> dom,
                       Report&                                  out) {
    ++out.stats.extensions;
    auto const& S = phi.target();
    auto const& T = phi.source();
    Recorder    pre{S, out, "extension"};
    try {
      if (!is_clifford(S)) {
        pre.fail("target is Clifford");
        return;
      }
      pre.check(is_weakly_reductive(S), "Clifford semigroups are weakly reductive");

      auto const     w = build_extension(phi);
      Recorder const r{w.sigma, out, "extension"};
      r.check(classify_extension(w.sigma, w.ideal).kind == ExtensionKind::strict,
              "built extensions are strict");
      r.check(recover_partial_hom(w) == phi, "recovered partial homomorphism is phi");

      auto const cd = clifford_decompose(w.sigma, w.ideal);

      GreenStructure const     GS(S);
      std::vector<std::size_t> predicted(w.sigma.size());
      for (element_index x = 0; x < w.sigma.size(); ++x) {
        auto const s = w.ideal.contains(x) ? w.s_of_sigma[x] : phi(w.t_of_sigma[x]);
        predicted[x] = GS.H().class_of(s);
      }
      r.check(Partition::from_labels(predicted) == cd.classes,
              "components are G_alpha with the A mapping into G_alpha");
      if (dom) {
        std::vector<std::size_t> labels(dom->begin(), dom->end());
        r.check(Partition::from_labels(labels) == cd.classes,
                "components are indexed by domains");
      }
      auto const E = subsemigroup(S, idempotents(S)).semigroup;
      r.check(isomorphic(cd.quotient, E), "Sigma / ~ is isomorphic to the semilattice E(S)");
      bool const t_stratified = is_grillet_stratified(T);
      std::vector<GroupExtensionPart> parts;
      for (auto const& c : cd.components) {
        if (t_stratified) {
          r.check(c.quotient_grillet_stratified,
                  "components of a stratified extension are stratified",
                  str(c.extension));
        }
        parts.push_back({c.extension, c.group});
      }

      auto const psi = canonical_phi(w.sigma, parts);
      std::size_t const ns = S.size();
      for (element_index A = 0; A < T.size(); ++A) {
        if (phi(A) != no_element) {
          r.check(psi(w.sigma_of_t[A] - static_cast<element_index>(ns)) == phi(A),
                  "A e_alpha = phi(A)", str({A}));
        }
      }
      r.check(build_extension(psi).sigma == ideal_first(w.sigma, w.ideal),
              "canonical phi rebuilds the table exactly");
    } catch (std::exception const& e) {
      pre.fail("exception", e.what());
    }
  }

  void check_extension_round_trips(std::size_t   random_count,
                                   std::uint64_t seed,
                                   Report&       out) {
    Rng rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
      check_extension(zoo::random_partial_hom(rng), std::nullopt, out);
    }
    std::vector<Semigroup> const groups{zoo::cyclic_group(2), zoo::cyclic_group(3)};
    for (std::size_t n = 1; n <= 2; ++n) {
      for (std::size_t m = 1; m <= 3; ++m) {
        // Each coordinate picks a group and an element of it.
        std::vector<std::size_t> choice(n, 0);
        while (true) {
          std::vector<Semigroup>     gs;
          std::vector<element_index> picks;
          for (auto c : choice) {
            gs.push_back(groups[c / 3]);
            picks.push_back(static_cast<element_index>(c % 3));
          }
          bool valid = true;
          for (std::size_t i = 0; i < n; ++i) {
            valid = valid && picks[i] < gs[i].size();
          }
          if (valid) {
            try {
              auto const e = zoo::partial_map_extension(n, m, gs, picks);
              check_extension(recover_partial_hom(e.witness), e.dom, out);
            } catch (Error const& e) {
              if (e.kind() != ErrorKind::law_violation) {
                throw;
              }
            }
          }
          std::size_t i = 0;
          while (i < n && ++choice[i] == 6) {
            choice[i++] = 0;
          }
          if (i == n) {
            break;
          }
        }
      }
    }
  }

  void check_monoid_extensions(std::size_t max_order, Report& out) {
    for (std::size_t n = 2; n <= max_order; ++n) {
      for (auto const& sigma : zoo::enumerate_associative(n)) {
        Recorder const r{sigma, out, "extension"};
        for (element_index z = 0; z < n; ++z) {
          auto ideal = ElementSet::full(n);
          ideal.erase(z);
          if (!is_ideal(sigma, ideal)
              || !subsemigroup(sigma, ideal).semigroup.identity().has_value()) {
            continue;
          }
          ++out.stats.extensions;
          r.check(classify_extension(sigma, ideal).kind == ExtensionKind::strict,
                  "extensions of monoids are strict", str(ideal));
        }
      }
    }
  }

  void check_zoo_semilattices(Report& out) {
    using namespace zoo;
    std::vector<Semigroup> pool{
        monogenic(1, 1),       monogenic(2, 1),        monogenic(3, 2),
        cyclic_group(2),       cyclic_group(3),        rectangular_band(1, 2),
        rectangular_band(2, 2), zero_semigroup(2),     left_zero(2),
        build_extension(validate_partial_hom(zero_semigroup(2), cyclic_group(2), {0, 1}))
            .sigma};
    for (auto const& C : pool) {
      auto const base = PowerChain(C).stable_set();
      Recorder{C, out, "master"}.check(
          is_completely_simple(C, base) && base == regular_elements(C),
          "zoo component is a stratified extension of a completely simple base");
    }
    std::vector<Semigroup> shapes{chain(2), chain(3), antichain_with_bottom(2)};
    for (auto const& Y : shapes) {
      std::size_t const        k = Y.size();
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        std::vector<Semigroup> comps;
        for (auto p : pick) {
          comps.push_back(pool[p]);
        }
        auto const     S = strong_semilattice(Y, comps);
        Recorder const r{S, out, "master"};
        ++out.stats.tables;
        try {
          r.check(is_conditionally_completely_regular(S),
                  "semilattices of stratified extensions of completely simple "
                  "semigroups are CCR");
          std::vector<std::size_t> labels;
          ElementSet               bases(S.size());
          element_index            off = 0;
          for (std::size_t a = 0; a < k; ++a) {
            auto const cb = PowerChain(comps[a]).stable_set();
            for (element_index x = 0; x < comps[a].size(); ++x) {
              labels.push_back(a);
              if (cb.contains(x)) {
                bases.insert(off + x);
              }
            }
            off += static_cast<element_index>(comps[a].size());
          }
          r.check(bases.is_subset_of(stratify(S).base),
                  "the component bases lie in the base");
          r.check(rho_partition(S) == Partition::from_labels(labels),
                  "rho recovers the assembled components");
        } catch (std::exception const& e) {
          r.fail("exception", e.what());
        }
        std::size_t i = 0;
        while (i < k && ++pick[i] == pool.size()) {
          pick[i++] = 0;
        }
        if (i == k) {
          break;
        }
      }
    }
    for (auto const& R : pool) {
      for (auto const& T : pool) {
        auto const     S = absorption_sum(R, T);
        Recorder const r{S, out, "stratification"};
        ElementSet     t_part(S.size());
        for (element_index x = 0; x < T.size(); ++x) {
          t_part.insert(static_cast<element_index>(R.size() + x));
        }
        r.check(t_part.is_subset_of(stratify(S).base), "T lies in the base of R + T");
        r.check(isomorphic(rees_quotient(S, t_part).semigroup, adjoin_zero(R)),
                "(R + T) / T is R with a zero");
      }
    }
  }

}  // namespace strata::verify
