#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "descartes/cli/app.hpp"
#include "descartes/cli/document.hpp"
#include "descartes/cli/parse.hpp"
#include "support/generators.hpp"

namespace descartes::cli {
namespace {

Rational Q(long p, long q = 1) { return Rational(p, q); }

Polynomial P(std::initializer_list<long> asc) {
  std::vector<Rational> c;
  for (long x : asc) c.emplace_back(x);
  return Polynomial(std::move(c));
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "descartes");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(DESCARTES_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParsePolynomial, Examples) {
  EXPECT_EQ(parse_polynomial("3x^4 - x"), P({0, -1, 0, 0, 3}));
  EXPECT_EQ(parse_polynomial("[1, 0, -1]"), P({-1, 0, 1}));
  EXPECT_EQ(parse_polynomial("x^2 + x^2"), P({0, 0, 2}));
}

TEST(ParsePolynomial, Syntax) {
  EXPECT_EQ(parse_polynomial("+7/2x^2 - 1"), (Polynomial{Q(-1), Q(0), Q(7, 2)}));
  EXPECT_EQ(parse_polynomial("-X"), P({0, -1}));
  EXPECT_EQ(parse_polynomial("2*x + 3 * X ^ 2"), P({0, 2, 3}));
  EXPECT_EQ(parse_polynomial("  - 1  "), P({-1}));
  EXPECT_EQ(parse_polynomial("[ -1/2 , 3 ]"), (Polynomial{Q(3), Q(-1, 2)}));
  EXPECT_TRUE(parse_polynomial("x - x").is_zero());
  EXPECT_TRUE(parse_polynomial("[]").is_zero());
  EXPECT_TRUE(parse_polynomial("0").is_zero());
}

TEST(ParsePolynomial, ErrorsCarryPositions) {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_polynomial(text);
    } catch (const parse_error& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("x^"), 2u);
  EXPECT_EQ(position_of("3x 2"), 3u);
  EXPECT_EQ(position_of("x + y"), 4u);
  EXPECT_EQ(position_of("1/0x"), 2u);
  EXPECT_EQ(position_of("[1, 2"), 5u);
  EXPECT_EQ(position_of("[1, 2] x"), 7u);
}

TEST(FormatPolynomial, Examples) {
  EXPECT_EQ(format_polynomial(P({0, -1, 0, 0, 3})), "3x^4 - x");
  EXPECT_EQ(format_polynomial(P({-1, 0, 1})), "x^2 - 1");
  EXPECT_EQ(format_polynomial((Polynomial{Q(1), Q(0), Q(-7, 2)})), "-7/2x^2 + 1");
  EXPECT_EQ(format_polynomial(Polynomial{}), "0");
  EXPECT_EQ(format_polynomial(P({-1})), "-1");
}

TEST(FormatPolynomial, ParseFormatParseIsIdentity) {
  testing::PolyGen g(61);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> c;
    const long n = g.integer(0, 8);
    for (long k = 0; k <= n; ++k) c.push_back(g.chance(0.3) ? Rational(0) : g.rational(12, 5));
    Polynomial p(std::move(c));
    EXPECT_EQ(parse_polynomial(format_polynomial(p)), p) << format_polynomial(p);
  }
}

TEST(Document, JsonRoundTrip) {
  for (auto doc : {cmd_analyze(P({0, -1, 0, 0, 3}), true), cmd_budan(P({1, 0, 1}), Q(-2), Q(2)),
                   cmd_isolate(P({2, -3, 0, 1})), cmd_isolate(P({-2, 0, 1}), Q(1, 8))}) {
    EXPECT_EQ(from_json(Json::parse(to_json(doc).dump())), doc);
  }
}

TEST(CmdAnalyze, Examples) {
  auto d = cmd_analyze(parse_polynomial("x^2 - 1"));
  EXPECT_EQ(d.v, 1u);
  EXPECT_EQ(d.c, 1u);
  EXPECT_EQ(d.descartes.positive_upper, 1u);
  EXPECT_EQ(d.descartes.negative_upper, 1u);
  EXPECT_EQ(d.de_gua.imaginary_lower, 0u);

  d = cmd_analyze(parse_polynomial("x^4 + x + 1"), true);
  EXPECT_EQ(d.de_gua.imaginary_lower, 2u);
  EXPECT_EQ(*d.exact, (ExactRootCounts{0, 0, 0}));

  d = cmd_analyze(parse_polynomial("3x^4 - x"));
  EXPECT_EQ(d.z0, 1u);
  EXPECT_EQ(d.v, 1u);
  EXPECT_EQ(d.c, 0u);
  ASSERT_EQ(d.de_gua.blocks.size(), 1u);
  EXPECT_EQ(d.de_gua.blocks[0].loss, 2u);
}

TEST(CmdBudan, Examples) {
  auto d = cmd_budan(parse_polynomial("x^2 - 1"), Q(0), Q(2));
  EXPECT_EQ(d.budan->bound, 1u);
  EXPECT_EQ(d.budan->parity, 1u);
  d = cmd_budan(parse_polynomial("x^2 + 1"), Q(-2), Q(2));
  EXPECT_EQ(d.budan->bound, 2u);
  EXPECT_EQ(d.budan->parity, 0u);
}

TEST(CmdIsolate, Examples) {
  auto d = cmd_isolate(parse_polynomial("x^2 - 1"));
  ASSERT_EQ(d.roots->size(), 2u);
  EXPECT_EQ((*d.roots)[0].multiplicity, 1u);
  EXPECT_TRUE(cmd_isolate(parse_polynomial("x^2 + 1")).roots->empty());
  d = cmd_isolate(parse_polynomial("[1, -2, 1]"));
  ASSERT_EQ(d.roots->size(), 1u);
  EXPECT_EQ((*d.roots)[0].multiplicity, 2u);
}

TEST(Golden, AnalyzeXSquaredMinusOne) {
  auto r = run_args({"analyze", "x^2 - 1", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_golden("analyze_x2_minus_1.json"));
}

TEST(Golden, AnalyzeQuarticWithExact) {
  auto r = run_args({"analyze", "x^4 + x + 1", "--exact", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_golden("analyze_x4_x_1_exact.json"));
}

TEST(Golden, AnalyzeThreeXFourMinusX) {
  auto r = run_args({"analyze", "3x^4 - x", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_golden("analyze_3x4_minus_x.json"));
}

TEST(Golden, BudanAndIsolate) {
  auto r = run_args({"budan", "x^2 + 1", "-2", "2", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_golden("budan_x2_plus_1.json"));
  r = run_args({"isolate", "[1, -2, 1]", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_golden("isolate_x_minus_1_squared.json"));
}

TEST(ExitCodes, DomainErrorsAreOne) {
  auto r = run_args({"budan", "x^2 - 1", "1", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("left endpoint is a root"), std::string::npos);
  EXPECT_EQ(run_args({"analyze", "0"}).code, 1);
  EXPECT_NE(run_args({"analyze", "0"}).err.find("zero polynomial"), std::string::npos);
  EXPECT_EQ(run_args({"analyze", "5"}).code, 1);
  EXPECT_EQ(run_args({"isolate", "7"}).code, 1);
}

TEST(ExitCodes, UsageErrorsAreTwo) {
  EXPECT_EQ(run_args({"budan", "x^2 - 1", "2", "0"}).code, 2);
  EXPECT_EQ(run_args({"analyze", "x^^2"}).code, 2);
  EXPECT_EQ(run_args({"analyze"}).code, 2);
  EXPECT_EQ(run_args({}).code, 2);
  EXPECT_EQ(run_args({"frobnicate", "x"}).code, 2);
  EXPECT_EQ(run_args({"budan", "x", "1/0", "2"}).code, 2);
  EXPECT_EQ(run_args({"isolate", "x", "--width", "0"}).code, 2);
}

TEST(ExitCodes, SuccessAndText) {
  auto r = run_args({"analyze", "x^3 - 7x + 6", "--exact"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("alternations (v)  2"), std::string::npos) << r.out;
  r = run_args({"isolate", "x^2 - 2", "--width", "1/1000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2 distinct"), std::string::npos) << r.out;
  EXPECT_EQ(run_args({"--help"}).code, 0);
}

}  // namespace
}  // namespace descartes::cli
