// Command-line frontend for the qnum shared library. Talks to the library
// exclusively through the C interface in qnum.h.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnum.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { qnum_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct CfDeleter {
  void operator()(qnum_cf* p) const { qnum_cf_free(p); }
};
using Cf = std::unique_ptr<qnum_cf, CfDeleter>;

struct PolyDeleter {
  void operator()(qnum_poly* p) const { qnum_poly_free(p); }
};
using Poly = std::unique_ptr<qnum_poly, PolyDeleter>;

struct RatDeleter {
  void operator()(qnum_ratfunc* p) const { qnum_ratfunc_free(p); }
};
using Rat = std::unique_ptr<qnum_ratfunc, RatDeleter>;

struct SeriesDeleter {
  void operator()(qnum_series* p) const { qnum_series_free(p); }
};
using Series = std::unique_ptr<qnum_series, SeriesDeleter>;

// Fails hard on library errors: prints the diagnostic and exits 1.
void check(qnum_status st) {
  if (st == QNUM_OK) return;
  std::cerr << "error: " << qnum_status_name(st) << ": " << qnum_last_error() << "\n";
  std::exit(1);
}

CString take(char* s) { return CString(s); }

bool parse_fraction(const std::string& text, std::int64_t& r, std::int64_t& s) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      r = std::stoll(text);
      s = 1;
    } else {
      r = std::stoll(text.substr(0, slash));
      s = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

Cf parse_cf(const std::string& spec) {
  qnum_cf* cf = nullptr;
  check(qnum_cf_parse(spec.c_str(), &cf));
  return Cf(cf);
}

void write_output(const std::string& path, const char* data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(1);
  }
  out << data;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-deformations of rational and real numbers"};
  app.require_subcommand(1);
  app.footer("QNUM_PRECISION sets the default root-residual tolerance (default 1e-12).");

  // qrat
  std::string qrat_fraction;
  bool qrat_json = false;
  auto* qrat = app.add_subcommand("qrat", "Print the q-deformation of a rational r/s");
  qrat->add_option("fraction", qrat_fraction, "rational, e.g. 5/2 or -1/2")->required();
  qrat->add_flag("--json", qrat_json, "machine-readable output");

  // series
  std::string series_cf, series_fraction, series_bfile;
  int series_order = 12;
  bool series_json = false;
  auto* series = app.add_subcommand("series", "Stabilized power series of a q-real");
  series->add_option("--cf", series_cf, "continued fraction, e.g. \"[1;(1)]\"");
  series->add_option("--fraction", series_fraction, "rational r/s (Taylor expansion instead)");
  series->add_option("--order", series_order, "number of exponents, starting at the lowest")
      ->check(CLI::PositiveNumber);
  series->add_flag("--json", series_json, "machine-readable output");
  series->add_option("--bfile", series_bfile, "write an OEIS b-file to this path ('-' = stdout)");

  // cf
  std::string cf_to, cf_fraction, cf_spec;
  bool cf_json = false;
  auto* cfcmd = app.add_subcommand("cf", "Continued fraction expansion / conversion");
  cfcmd->add_option("--to", cf_to, "target form: hj or regular")
      ->required()
      ->check(CLI::IsMember({"hj", "regular"}));
  cfcmd->add_option("fraction", cf_fraction, "rational r/s to expand");
  cfcmd->add_option("--cf", cf_spec, "continued fraction to convert");
  cfcmd->add_flag("--json", cf_json, "machine-readable output");

  // family
  std::string family_name;
  int family_n = 5;
  bool family_tilde = false, family_triangle = false, family_flat = false, family_json = false;
  std::string family_csv;
  auto* family = app.add_subcommand("family", "Fibonacci/Pell polynomial families");
  family->add_option("family", family_name, "fib or pell")
      ->required()
      ->check(CLI::IsMember({"fib", "pell"}));
  family->add_option("--n", family_n, "index (or row count with --triangle)")->required();
  family->add_flag("--tilde", family_tilde, "mirror family");
  family->add_flag("--triangle", family_triangle, "print coefficient triangle rows");
  family->add_flag("--flat", family_flat, "triangle as an OEIS-style flat list");
  family->add_option("--csv", family_csv, "write triangle CSV to this path ('-' = stdout)");
  family->add_flag("--json", family_json, "machine-readable output");

  // roots
  std::string roots_family, roots_csv;
  int roots_n = 10;
  bool roots_tilde = false, roots_json = false;
  double roots_tol = 0.0;
  auto* roots = app.add_subcommand("roots", "Complex roots of a family polynomial");
  roots->add_option("--family", roots_family, "fib or pell")
      ->required()
      ->check(CLI::IsMember({"fib", "pell"}));
  roots->add_option("--n", roots_n, "index")->required();
  roots->add_flag("--tilde", roots_tilde, "mirror family");
  roots->add_option("--csv", roots_csv, "write re,im,modulus CSV to this path ('-' = stdout)");
  roots->add_option("--tol", roots_tol, "residual tolerance (default from QNUM_PRECISION)");
  roots->add_flag("--json", roots_json, "machine-readable output");

  // annulus
  std::string annulus_family;
  int annulus_max = 20;
  bool annulus_json = false;
  auto* annulus = app.add_subcommand("annulus", "Root annulus check for a family");
  annulus->add_option("--family", annulus_family, "fib or pell")
      ->required()
      ->check(CLI::IsMember({"fib", "pell"}));
  annulus->add_option("--max", annulus_max, "largest index")->required();
  annulus->add_flag("--json", annulus_json, "machine-readable output");

  // radius
  std::string radius_cf;
  bool radius_exact_flag = false, radius_numeric_flag = false, radius_json = false;
  int radius_depth = 64;
  auto* radius = app.add_subcommand("radius", "Radius of convergence of a q-real series");
  radius->add_option("--cf", radius_cf, "continued fraction")->required();
  radius->add_flag("--exact", radius_exact_flag, "discriminant certificate method");
  radius->add_flag("--numeric", radius_numeric_flag, "coefficient growth estimators");
  radius->add_option("--depth", radius_depth, "series coefficients for the numeric method");
  radius->add_flag("--json", radius_json, "machine-readable output");

  // genthm
  std::string genthm_cf;
  int genthm_depth = 60;
  bool genthm_json = false;
  auto* genthm = app.add_subcommand("genthm", "Tail-condition lower-bound checker");
  genthm->add_option("--cf", genthm_cf, "continued fraction")->required();
  genthm->add_option("--depth", genthm_depth, "denominator depth for the empirical scan");
  genthm->add_flag("--json", genthm_json, "machine-readable output");

  // scan
  int scan_samples = 1000, scan_threads = 0;
  std::uint64_t scan_seed = 1;
  bool scan_json = false;
  auto* scan = app.add_subcommand("scan", "Randomized lower-bound conjecture scan");
  scan->add_option("--samples", scan_samples, "sample count")->check(CLI::PositiveNumber);
  scan->add_option("--seed", scan_seed, "RNG seed");
  scan->add_option("--threads", scan_threads, "worker threads (0 = hardware)");
  scan->add_flag("--json", scan_json, "full machine-readable report");

  // verify
  std::string verify_suite = "paper";
  auto* verify = app.add_subcommand("verify", "Run the golden reproduction suite");
  verify->add_option("--suite", verify_suite, "suite name")->check(CLI::IsMember({"paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (qrat->parsed()) {
    std::int64_t r = 0, s = 1;
    if (!parse_fraction(qrat_fraction, r, s)) {
      std::cerr << "error: cannot parse fraction " << qrat_fraction << "\n";
      return 2;
    }
    qnum_ratfunc* rf = nullptr;
    check(qnum_qrat(r, s, &rf));
    Rat owner(rf);
    char* text = nullptr;
    check(qrat_json ? qnum_ratfunc_json(rf, &text) : qnum_ratfunc_display(rf, &text));
    std::cout << take(text).get() << "\n";
    return 0;
  }

  if (series->parsed()) {
    qnum_series* s = nullptr;
    if (!series_cf.empty()) {
      Cf cf = parse_cf(series_cf);
      check(qnum_series_from_cf(cf.get(), series_order, &s));
    } else if (!series_fraction.empty()) {
      std::int64_t r = 0, den = 1;
      if (!parse_fraction(series_fraction, r, den)) {
        std::cerr << "error: cannot parse fraction " << series_fraction << "\n";
        return 2;
      }
      check(qnum_series_from_fraction(r, den, series_order, &s));
    } else {
      std::cerr << "error: series needs --cf or --fraction\n";
      return 2;
    }
    Series owner(s);
    if (!series_bfile.empty()) {
      char* dump = nullptr;
      check(qnum_series_bfile(s, &dump));
      write_output(series_bfile, take(dump).get());
      if (series_bfile != "-") std::cout << "wrote " << series_bfile << "\n";
      return 0;
    }
    char* text = nullptr;
    check(series_json ? qnum_series_json(s, &text) : qnum_series_display(s, &text));
    std::cout << take(text).get() << "\n";
    return 0;
  }

  if (cfcmd->parsed()) {
    Cf cf;
    if (!cf_spec.empty()) {
      cf = parse_cf(cf_spec);
    } else if (!cf_fraction.empty()) {
      std::int64_t r = 0, s = 1;
      if (!parse_fraction(cf_fraction, r, s)) {
        std::cerr << "error: cannot parse fraction " << cf_fraction << "\n";
        return 2;
      }
      qnum_cf* raw = nullptr;
      check(qnum_cf_expand(r, s, cf_to == "hj" ? 1 : 0, &raw));
      cf = Cf(raw);
    } else {
      std::cerr << "error: cf needs a fraction or --cf\n";
      return 2;
    }
    qnum_cf* converted = nullptr;
    check(qnum_cf_convert(cf.get(), cf_to == "hj" ? 1 : 0, &converted));
    Cf owner(converted);
    char* text = nullptr;
    check(cf_json ? qnum_cf_json(converted, &text) : qnum_cf_format(converted, &text));
    std::cout << take(text).get() << "\n";
    return 0;
  }

  if (family->parsed()) {
    if (family_triangle || !family_csv.empty() || family_flat) {
      char* text = nullptr;
      check(qnum_family_triangle(family_name.c_str(), family_n, family_tilde ? 1 : 0,
                                 family_flat ? 0 : 1, &text));
      CString owned = take(text);
      if (!family_csv.empty()) {
        write_output(family_csv, owned.get());
        if (family_csv != "-") std::cout << "wrote " << family_csv << "\n";
      } else {
        std::cout << owned.get();
      }
      return 0;
    }
    qnum_poly* p = nullptr;
    check(qnum_family_poly(family_name.c_str(), family_n, family_tilde ? 1 : 0, &p));
    Poly owner(p);
    char* text = nullptr;
    check(family_json ? qnum_poly_json(p, &text) : qnum_poly_display(p, &text));
    std::cout << take(text).get() << "\n";
    return 0;
  }

  if (roots->parsed()) {
    qnum_poly* p = nullptr;
    check(qnum_family_poly(roots_family.c_str(), roots_n, roots_tilde ? 1 : 0, &p));
    Poly owner(p);
    if (!roots_csv.empty()) {
      char* csv = nullptr;
      check(qnum_poly_roots_csv(p, roots_tol, &csv));
      write_output(roots_csv, take(csv).get());
      if (roots_csv != "-") std::cout << "wrote " << roots_csv << "\n";
      return 0;
    }
    char* text = nullptr;
    check(qnum_poly_roots_json(p, roots_tol, &text));
    std::cout << take(text).get() << "\n";
    (void)roots_json;
    return 0;
  }

  if (annulus->parsed()) {
    char* text = nullptr;
    check(qnum_annulus_json(annulus_family.c_str(), annulus_max, &text));
    std::cout << take(text).get() << "\n";
    (void)annulus_json;
    return 0;
  }

  if (radius->parsed()) {
    Cf cf = parse_cf(radius_cf);
    char* cf_json = nullptr;
    check(qnum_cf_json(cf.get(), &cf_json));
    const bool periodic = !nlohmann::json::parse(take(cf_json).get())["period"].empty();
    const bool use_exact = radius_exact_flag || (!radius_numeric_flag && periodic);
    char* text = nullptr;
    if (use_exact) {
      check(qnum_radius_exact_json(cf.get(), &text));
    } else {
      check(qnum_radius_numeric_json(cf.get(), radius_depth, &text));
    }
    CString owned = take(text);
    if (radius_json) {
      std::cout << owned.get() << "\n";
      return 0;
    }
    nlohmann::json rep = nlohmann::json::parse(owned.get());
    std::printf("%.10g\n", rep[use_exact ? "value" : "radius"].get<double>());
    if (use_exact && rep.contains("certificate"))
      std::cout << "certificate: " << rep["certificate"]["polynomial"].get<std::string>()
                << "\n";
    if (!use_exact)
      std::cout << "ratio-estimate: " << rep["ratio"]["value"].get<double>()
                << "  root-estimate: " << rep["root"]["value"].get<double>() << "\n";
    return 0;
  }

  if (genthm->parsed()) {
    Cf cf = parse_cf(genthm_cf);
    char* text = nullptr;
    check(qnum_genthm_json(cf.get(), genthm_depth, &text));
    std::cout << take(text).get() << "\n";
    (void)genthm_json;
    return 0;
  }

  if (scan->parsed()) {
    char* text = nullptr;
    check(qnum_scan_json(scan_samples, scan_seed, scan_threads, &text));
    CString owned = take(text);
    if (scan_json) {
      std::cout << owned.get() << "\n";
      return 0;
    }
    nlohmann::json rep = nlohmann::json::parse(owned.get());
    for (const char* key : {"golden_radius", "min_certified_radius", "violations",
                            "unconfirmed", "equality_cases", "failures"})
      std::cout << key << " = " << rep[key] << "\n";
    if (rep["violations"].get<int>() > 0)
      std::cout << "counterexample candidate: " << rep["min_certified_cf"] << "\n";
    return 0;
  }

  if (verify->parsed()) {
    char* report = nullptr;
    int ok = 0;
    check(qnum_verify_paper(&report, &ok));
    std::cout << take(report).get();
    return ok ? 0 : 1;
  }

  return 2;
}
