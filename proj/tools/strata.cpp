// Command-line front end: validate, analyze, decompose, extend, zoo,
// enumerate and verify.
//
// Exit codes: 0 success, 1 validation or property failure, 2 usage error,
// 3 I/O error.

#include <chrono>      // for steady_clock
#include <cstdint>     // for uint64_t
#include <filesystem>  // for path
#include <fstream>     // for ofstream
#include <iostream>    // for cout, cerr
#include <string>      // for string
#include <vector>      // for vector

#include <CLI11.hpp>

#include "strata/decompose.hpp"
#include "strata/error.hpp"
#include "strata/extend.hpp"
#include "strata/io.hpp"
#include "strata/report.hpp"
#include "strata/verify.hpp"
#include "strata/zoo.hpp"

namespace {

  using namespace strata;
  namespace fs = std::filesystem;

  enum exit_code : int { ok = 0, failure = 1, usage = 2, io_error = 3 };

  int report_error(std::string const& where, Error const& e) {
    std::cerr << where << ": error: " << e.what() << '\n';
    return e.kind() == ErrorKind::io ? io_error : failure;
  }

  // Writes text to path, or to stdout when path is empty.
  void emit(std::string const& path, std::string const& text) {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out || !(out << text)) {
      throw Error(ErrorKind::io, "cannot write '" + path + "'");
    }
  }

  int cmd_validate(std::string const& path) {
    auto const S = read_sgt(path);
    std::cout << path << ": valid semigroup of order " << S.size() << '\n';
    return ok;
  }

  int cmd_analyze(std::string const& path, bool json, std::string const& out) {
    auto const B = analyze(read_sgt(path));
    emit(out, json ? to_json(B).dump(2) + "\n" : render_text(B));
    return ok;
  }

  int cmd_decompose(std::string const& path, bool json, std::string const& out) {
    auto const S = read_sgt(path);
    auto const R = verify_rho(S);
    if (json) {
      nlohmann::json const doc = {{"schema_version", schema_version},
                                  {"semigroup", to_json(S)},
                                  {"decomposition", to_json(R)}};
      emit(out, doc.dump(2) + "\n");
    } else {
      emit(out, render_text(S, R));
    }
    return ok;
  }

  int cmd_extend(std::string const& path, std::string const& out) {
    auto const w = build_extension(read_phm(path));
    emit(out, to_sgt(w.sigma));
    if (!out.empty()) {
      std::cout << "wrote " << out << ": order " << w.sigma.size() << '\n';
    }
    return ok;
  }

  int cmd_zoo(bool list,
              std::string const&              name,
              std::vector<std::size_t> const& params,
              std::string const&              out) {
    if (list) {
      for (auto const& f : zoo::fixtures()) {
        std::cout << f.name << (f.parameters.empty() ? "" : " " + f.parameters) << "  "
                  << f.description << '\n';
      }
      return ok;
    }
    if (name.empty()) {
      std::cerr << "zoo: a fixture name or --list is required\n";
      return usage;
    }
    emit(out, to_sgt(zoo::named_fixture(name, params)));
    return ok;
  }

  int cmd_enumerate(std::size_t n, bool dedup, std::string const& out_dir) {
    auto const tables = zoo::enumerate_associative_parallel(n, dedup);
    std::cout << "order " << n << ": " << tables.size() << " associative tables"
              << (dedup ? " up to isomorphism and anti-isomorphism" : "") << '\n';
    if (!out_dir.empty()) {
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec) {
        throw Error(ErrorKind::io, "cannot create '" + out_dir + "'");
      }
      for (std::size_t k = 0; k < tables.size(); ++k) {
        write_sgt(fs::path(out_dir) / ("order" + std::to_string(n) + "_"
                                       + std::to_string(k) + ".sgt"),
                  tables[k]);
      }
    }
    return ok;
  }

  struct VerifyOptions {
    std::size_t   order   = 3;
    std::size_t   samples = 0;
    std::uint64_t seed    = default_seed;
    std::string   sampler = "uniform";
    bool          serial  = false;
    bool          json    = false;
  };

  int cmd_verify(VerifyOptions const& o) {
    using clock  = std::chrono::steady_clock;
    auto const t0 = clock::now();
    bool const par = !o.serial;

    auto const tables = par ? zoo::enumerate_associative_parallel(o.order)
                            : zoo::enumerate_associative(o.order);
    verify::Report report
        = par ? verify::run_parallel(tables) : verify::run_serial(tables);
    report += verify::run_products_for_order(o.order, par);
    verify::check_monoid_extensions(o.order, report);
    verify::check_zoo_semilattices(report);
    verify::check_extension_round_trips(50, o.seed, report);

    Rng        rng(o.seed);
    auto const sampler = o.sampler == "backtrack" ? zoo::Sampler::backtrack
                                                  : zoo::Sampler::uniform;
    auto const samples = zoo::sample_associative(5, o.samples, sampler, rng);
    report += par ? verify::run_parallel(samples, verify::stratification)
                  : verify::run_serial(samples, verify::stratification);
    report.normalize();
    double const secs = std::chrono::duration<double>(clock::now() - t0).count();

    if (o.json) {
      std::cout << to_json(report).dump(2) << '\n';
    } else {
      std::cout << "order " << o.order << ": " << tables.size() << " tables\n"
                << "order 5 samples: " << samples.size() << " associative of "
                << o.samples << " drawn (" << o.sampler << ", seed " << o.seed << ")\n"
                << "checked: " << report.stats.tables << " tables, " << report.stats.ccr
                << " CCR, " << report.stats.congruences << " congruences, "
                << report.stats.products << " products, " << report.stats.extensions
                << " extensions\n"
                << "W(st) = W(t)W(s) with E(S) a band: " << report.stats.band_equality_cases
                << " checked, " << report.observations.size() << " failed (not a violation)\n";
      for (auto const& v : report.violations) {
        std::cout << "VIOLATION [" << v.suite << "] " << v.property
                  << (v.detail.empty() ? "" : ": " + v.detail) << '\n'
                  << to_sgt(verify::table_of(v));
      }
      std::cout << (report.ok() ? "PASS" : "FAIL") << ": " << report.violations.size()
                << " violations in " << secs << " s\n";
    }
    return report.ok() ? ok : failure;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semigroup stratification, decomposition and extension toolkit"};
  app.require_subcommand(1);

  std::string path, out, name, out_dir;
  bool        json = false, text = false, list = false, dedup = false;
  std::size_t order = 3;
  std::vector<std::size_t> params;
  VerifyOptions            vo;

  auto* validate = app.add_subcommand("validate", "Check that a .sgt file is a semigroup");
  validate->add_option("file", path, ".sgt file")->required();

  auto* an = app.add_subcommand("analyze", "Green structure, stratification and more");
  an->add_option("file", path, ".sgt file")->required();
  auto* json_flag = an->add_flag("--json", json, "JSON output");
  an->add_flag("--text", text, "Text output (default)")->excludes(json_flag);
  an->add_option("-o,--output", out, "Write to a file instead of stdout");

  auto* de = app.add_subcommand("decompose", "The rho decomposition of a CCR semigroup");
  de->add_option("file", path, ".sgt file")->required();
  de->add_flag("--json", json, "JSON output");
  de->add_option("-o,--output", out, "Write to a file instead of stdout");

  auto* ex = app.add_subcommand("extend", "Build the extension given by a .phm file");
  ex->add_option("file", path, ".phm file")->required();
  ex->add_option("-o,--output", out, "Output .sgt file (default stdout)");

  auto* zo = app.add_subcommand("zoo", "Emit a named fixture as .sgt");
  zo->add_flag("--list", list, "List the fixtures");
  zo->add_option("name", name, "Fixture name");
  zo->add_option("params", params, "Fixture parameters");
  zo->add_option("-o,--output", out, "Output .sgt file (default stdout)");

  auto* en = app.add_subcommand("enumerate", "Count the associative tables of an order");
  en->add_option("--order", order, "Order, 1 to 4")
      ->check(CLI::Range(std::size_t{1}, zoo::AssociativeTables::max_order));
  en->add_flag("--dedup", dedup, "Up to isomorphism and anti-isomorphism");
  en->add_option("--out-dir", out_dir, "Write each table to a .sgt file here");

  auto* ve = app.add_subcommand("verify", "Run the property suites");
  ve->add_option("--order", vo.order, "Exhaustive order, 1 to 4")
      ->check(CLI::Range(std::size_t{1}, zoo::AssociativeTables::max_order));
  ve->add_option("--samples", vo.samples, "Random order-5 draws");
  ve->add_option("--seed", vo.seed, "Seed for every random choice");
  ve->add_option("--sampler", vo.sampler, "uniform (rejection) or backtrack")
      ->check(CLI::IsMember({"uniform", "backtrack"}));
  ve->add_flag("--serial", vo.serial, "Use the serial reference runners");
  ve->add_flag("--json", vo.json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*validate) {
      return cmd_validate(path);
    } else if (*an) {
      return cmd_analyze(path, json, out);
    } else if (*de) {
      return cmd_decompose(path, json, out);
    } else if (*ex) {
      return cmd_extend(path, out);
    } else if (*zo) {
      return cmd_zoo(list, name, params, out);
    } else if (*en) {
      return cmd_enumerate(order, dedup, out_dir);
    } else if (*ve) {
      return cmd_verify(vo);
    }
  } catch (Error const& e) {
    return report_error(path.empty() ? app.get_subcommands().front()->get_name() : path, e);
  } catch (InternalError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failure;
  }
  return usage;
}
