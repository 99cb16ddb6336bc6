#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "descartes/cli/document.hpp"
#include "descartes/cli/parse.hpp"
#include "descartes/error.hpp"

namespace descartes::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line. args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign-rule root bounds for rational polynomials"};
  app.require_subcommand(1);

  std::string poly_text;
  std::string a_text;
  std::string b_text;
  std::string width_text;
  bool exact = false;
  bool json = false;

  auto* analyze = app.add_subcommand("analyze", "Descartes, Fourier and De Gua bounds");
  analyze->add_option("polynomial", poly_text, "e.g. \"3x^4 - x\" or \"[3, 0, 0, -1, 0]\"")
      ->required();
  analyze->add_flag("--exact", exact, "add exact root counts from Sturm chains");
  analyze->add_flag("--json", json, "emit JSON");

  auto* budan = app.add_subcommand("budan", "Budan bound on the roots in (a, b]");
  budan->add_option("polynomial", poly_text)->required();
  budan->add_option("a", a_text, "left endpoint, integer or p/q")->required();
  budan->add_option("b", b_text, "right endpoint, integer or p/q")->required();
  budan->add_flag("--json", json, "emit JSON");

  auto* isolate = app.add_subcommand("isolate", "isolate the distinct real roots");
  isolate->add_option("polynomial", poly_text)->required();
  isolate->add_option("--width", width_text, "refine intervals to this width (p/q)");
  isolate->add_flag("--json", json, "emit JSON");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  AnalysisDocument doc;
  try {
    const Polynomial p = parse_polynomial(poly_text);
    if (analyze->parsed()) {
      doc = cmd_analyze(p, exact);
    } else if (budan->parsed()) {
      const Rational a = parse_rational(a_text);
      const Rational b = parse_rational(b_text);
      if (a > b) {
        err << "error: interval endpoints out of order: a > b\n";
        return kUsageError;
      }
      doc = cmd_budan(p, a, b);
    } else {
      std::optional<Rational> width;
      if (!width_text.empty()) {
        width = parse_rational(width_text);
        if (width->sign() <= 0) {
          err << "error: --width must be positive\n";
          return kUsageError;
        }
      }
      doc = cmd_isolate(p, width);
    }
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  if (json) {
    out << to_json(doc).dump(2) << "\n";
  } else {
    out << to_text(doc);
  }
  return kSuccess;
}

}  // namespace descartes::cli
