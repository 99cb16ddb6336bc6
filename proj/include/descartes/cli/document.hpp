#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "descartes/budan.hpp"
#include "descartes/cli/parse.hpp"
#include "descartes/isolation.hpp"
#include "descartes/sign_rules.hpp"
#include "descartes/sturm.hpp"

namespace descartes::cli {

using Json = nlohmann::ordered_json;

struct DescartesSection {
  std::size_t positive_upper = 0;
  std::size_t negative_upper = 0;
  unsigned positive_parity = 0;
  unsigned negative_parity = 0;
  friend bool operator==(const DescartesSection&, const DescartesSection&) = default;
};

struct BlockEntry {
  Sign left_sign = Sign::Plus;
  Sign right_sign = Sign::Plus;
  std::size_t zero_run = 0;
  std::size_t loss = 0;
  friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
};

struct DeGuaSection {
  std::size_t imaginary_lower = 0;
  std::vector<BlockEntry> blocks;
  friend bool operator==(const DeGuaSection&, const DeGuaSection&) = default;
};

struct BudanSection {
  Rational a;
  Rational b;
  std::size_t v_at_a = 0;
  std::size_t v_at_b = 0;
  std::size_t bound = 0;
  unsigned parity = 0;
  friend bool operator==(const BudanSection&, const BudanSection&) = default;
};

/// Everything one CLI invocation reports about a polynomial.
struct AnalysisDocument {
  std::string input;
  std::size_t degree = 0;
  std::size_t z0 = 0;
  std::size_t v = 0;
  std::size_t c = 0;
  DescartesSection descartes;
  DeGuaSection de_gua;
  std::optional<BudanSection> budan;
  std::optional<ExactRootCounts> exact;
  std::optional<std::vector<IsolatedRoot>> roots;
  friend bool operator==(const AnalysisDocument&, const AnalysisDocument&) = default;
};

inline AnalysisDocument cmd_analyze(const Polynomial& p, bool with_exact = false) {
  if (p.is_zero()) throw domain_error("zero polynomial");
  const RootBoundReport r = descartes_report(p);
  AnalysisDocument doc;
  doc.input = format_polynomial(p);
  doc.degree = r.counts.degree;
  doc.z0 = r.counts.zero_roots;
  doc.v = r.counts.alternations;
  doc.c = r.counts.permanences;
  doc.descartes = {r.positive_upper, r.negative_upper, r.positive_parity, r.negative_parity};
  doc.de_gua.imaginary_lower = r.imaginary_lower;
  for (const auto& b : de_gua_blocks(p)) {
    doc.de_gua.blocks.push_back({b.left_sign, b.right_sign, b.zero_run_length, b.loss});
  }
  if (with_exact) doc.exact = exact_root_counts(p);
  return doc;
}

inline AnalysisDocument cmd_budan(const Polynomial& p, const Rational& a, const Rational& b) {
  AnalysisDocument doc = cmd_analyze(p);
  const BudanReport r = budan_bound(p, a, b);
  doc.budan = BudanSection{r.a, r.b, r.v_at_a, r.v_at_b, r.bound, r.parity};
  return doc;
}

inline AnalysisDocument cmd_isolate(const Polynomial& p,
                                    const std::optional<Rational>& width = std::nullopt) {
  AnalysisDocument doc = cmd_analyze(p);
  auto roots = isolate_real_roots(p);
  if (width) {
    for (auto& r : roots) r = refine(r, p, *width);
  }
  doc.roots = std::move(roots);
  return doc;
}

namespace detail {

inline std::string sign_text(Sign s) { return std::string(1, sign_char(s)); }

inline Sign sign_from_text(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw parse_error("sign must be \"+\" or \"-\"", 0);
}

}  // namespace detail

inline Json to_json(const AnalysisDocument& doc) {
  Json j;
  j["input"] = doc.input;
  j["degree"] = doc.degree;
  j["z0"] = doc.z0;
  j["v"] = doc.v;
  j["c"] = doc.c;
  j["descartes"] = {{"positive_upper", doc.descartes.positive_upper},
                    {"negative_upper", doc.descartes.negative_upper},
                    {"positive_parity", doc.descartes.positive_parity},
                    {"negative_parity", doc.descartes.negative_parity}};
  Json blocks = Json::array();
  for (const auto& b : doc.de_gua.blocks) {
    blocks.push_back({{"left_sign", detail::sign_text(b.left_sign)},
                      {"right_sign", detail::sign_text(b.right_sign)},
                      {"zero_run", b.zero_run},
                      {"loss", b.loss}});
  }
  j["de_gua"] = {{"imaginary_lower", doc.de_gua.imaginary_lower}, {"blocks", blocks}};
  if (doc.budan) {
    const auto& b = *doc.budan;
    j["budan"] = {{"a", b.a.to_string()},   {"b", b.b.to_string()},
                  {"v_at_a", b.v_at_a},     {"v_at_b", b.v_at_b},
                  {"bound", b.bound},       {"parity", b.parity}};
  }
  if (doc.exact) {
    j["exact"] = {{"positive", doc.exact->positive},
                  {"negative", doc.exact->negative},
                  {"zero", doc.exact->zero}};
  }
  if (doc.roots) {
    Json roots = Json::array();
    for (const auto& r : *doc.roots) {
      Json e;
      if (r.is_point()) {
        e["point"] = r.low.to_string();
      } else {
        e["interval"] = {r.low.to_string(), r.high.to_string()};
      }
      e["multiplicity"] = r.multiplicity;
      roots.push_back(std::move(e));
    }
    j["roots"] = std::move(roots);
  }
  return j;
}

inline AnalysisDocument from_json(const Json& j) {
  AnalysisDocument doc;
  doc.input = j.at("input").get<std::string>();
  doc.degree = j.at("degree").get<std::size_t>();
  doc.z0 = j.at("z0").get<std::size_t>();
  doc.v = j.at("v").get<std::size_t>();
  doc.c = j.at("c").get<std::size_t>();
  const auto& d = j.at("descartes");
  doc.descartes = {d.at("positive_upper").get<std::size_t>(),
                   d.at("negative_upper").get<std::size_t>(),
                   d.at("positive_parity").get<unsigned>(),
                   d.at("negative_parity").get<unsigned>()};
  const auto& g = j.at("de_gua");
  doc.de_gua.imaginary_lower = g.at("imaginary_lower").get<std::size_t>();
  for (const auto& b : g.at("blocks")) {
    doc.de_gua.blocks.push_back({detail::sign_from_text(b.at("left_sign").get<std::string>()),
                                 detail::sign_from_text(b.at("right_sign").get<std::string>()),
                                 b.at("zero_run").get<std::size_t>(),
                                 b.at("loss").get<std::size_t>()});
  }
  if (j.contains("budan")) {
    const auto& b = j.at("budan");
    doc.budan = BudanSection{Rational::parse(b.at("a").get<std::string>()),
                             Rational::parse(b.at("b").get<std::string>()),
                             b.at("v_at_a").get<std::size_t>(),
                             b.at("v_at_b").get<std::size_t>(),
                             b.at("bound").get<std::size_t>(),
                             b.at("parity").get<unsigned>()};
  }
  if (j.contains("exact")) {
    const auto& e = j.at("exact");
    doc.exact = ExactRootCounts{e.at("positive").get<std::size_t>(),
                                e.at("negative").get<std::size_t>(),
                                e.at("zero").get<std::size_t>()};
  }
  if (j.contains("roots")) {
    std::vector<IsolatedRoot> roots;
    for (const auto& e : j.at("roots")) {
      IsolatedRoot r;
      if (e.contains("point")) {
        r.low = r.high = Rational::parse(e.at("point").get<std::string>());
      } else {
        r.low = Rational::parse(e.at("interval").at(0).get<std::string>());
        r.high = Rational::parse(e.at("interval").at(1).get<std::string>());
      }
      r.multiplicity = e.at("multiplicity").get<std::size_t>();
      roots.push_back(r);
    }
    doc.roots = std::move(roots);
  }
  return doc;
}

inline std::string to_text(const AnalysisDocument& doc) {
  std::ostringstream os;
  os << "polynomial        " << doc.input << "\n"
     << "degree            " << doc.degree << "\n"
     << "zero roots (z0)   " << doc.z0 << "\n"
     << "alternations (v)  " << doc.v << "\n"
     << "permanences (c)   " << doc.c << "\n"
     << "positive roots    <= " << doc.descartes.positive_upper << ", parity "
     << doc.descartes.positive_parity << "\n"
     << "negative roots    <= " << doc.descartes.negative_upper << ", parity "
     << doc.descartes.negative_parity << "\n"
     << "non-real roots    >= " << doc.de_gua.imaginary_lower << "\n";
  for (const auto& b : doc.de_gua.blocks) {
    os << "  zero block      " << sign_char(b.left_sign) << " 0^" << b.zero_run << " "
       << sign_char(b.right_sign) << "  loss " << b.loss << "\n";
  }
  if (doc.budan) {
    const auto& b = *doc.budan;
    os << "budan (" << b.a << ", " << b.b << "]  v(a) = " << b.v_at_a << ", v(b) = " << b.v_at_b
       << ", roots <= " << b.bound << ", parity " << b.parity << "\n";
  }
  if (doc.exact) {
    os << "exact counts      positive " << doc.exact->positive << ", negative "
       << doc.exact->negative << ", zero " << doc.exact->zero << "\n";
  }
  if (doc.roots) {
    os << "real roots        " << doc.roots->size() << " distinct\n";
    for (const auto& r : *doc.roots) {
      if (r.is_point()) {
        os << "  x = " << r.low;
      } else {
        os << "  x in (" << r.low << ", " << r.high << ")";
      }
      os << "  multiplicity " << r.multiplicity << "\n";
    }
  }
  return os.str();
}

}  // namespace descartes::cli
