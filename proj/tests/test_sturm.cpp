#include <gtest/gtest.h>

#include "descartes/sturm.hpp"
#include "support/generators.hpp"

namespace descartes {
namespace {

using testing::PolyGen;

Rational Q(long p, long q = 1) { return Rational(p, q); }

Polynomial P(std::initializer_list<long> asc) {
  std::vector<Rational> c;
  for (long x : asc) c.emplace_back(x);
  return Polynomial(std::move(c));
}

TEST(SturmChain, Examples) {
  auto c = sturm_chain(P({-1, 0, 1}));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.polys()[0], P({-1, 0, 1}));
  EXPECT_EQ(c.polys()[1], P({0, 2}));
  EXPECT_EQ(c.polys()[2], P({1}));

  c = sturm_chain(P({1, 0, 1}));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.polys()[2], P({-1}));

  c = sturm_chain(P({1, -2, 1}));  // (X - 1)^2
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.polys()[0], P({-1, 1}));

  EXPECT_THROW(sturm_chain(P({2})), domain_error);
  EXPECT_THROW(sturm_chain(Polynomial{}), domain_error);
}

TEST(CountDistinctRoots, Examples) {
  auto c = sturm_chain(P({-1, 0, 1}));
  EXPECT_EQ(count_distinct_roots(c, Q(-2), Q(2)), 2u);
  EXPECT_EQ(count_distinct_roots(c, Q(-1), Q(1)), 1u);  // (-1, 1]
  EXPECT_EQ(count_distinct_roots(sturm_chain(P({1, 0, 1})), Q(-10), Q(10)), 0u);
  EXPECT_THROW(count_distinct_roots(c, Q(1), Q(0)), domain_error);
}

TEST(CountRootsWithMultiplicity, Examples) {
  auto p = P({2, -3, 0, 1});  // (X - 1)^2 (X + 2)
  EXPECT_EQ(count_roots_with_multiplicity(p, Q(0), Q(3)), 2u);
  EXPECT_EQ(count_roots_with_multiplicity(p, Q(-3), Q(0)), 1u);
  EXPECT_EQ(count_roots_with_multiplicity(P({1, 0, 1}), Q(-100), Q(100)), 0u);
  EXPECT_THROW(count_roots_with_multiplicity(p, Q(1), Q(0)), domain_error);
}

TEST(ExactRootCounts, Examples) {
  EXPECT_EQ(exact_root_counts(P({-1, 0, 1})), (ExactRootCounts{1, 1, 0}));
  EXPECT_EQ(exact_root_counts(P({0, -1, 0, 0, 3})), (ExactRootCounts{1, 0, 1}));
  EXPECT_EQ(exact_root_counts(P({6, -7, 0, 1})), (ExactRootCounts{2, 1, 0}));
  EXPECT_EQ(exact_root_counts(P({0, 0, 5})), (ExactRootCounts{0, 0, 2}));
  EXPECT_THROW(exact_root_counts(P({1})), domain_error);
}

TEST(SturmProperty, MatchesConstruction) {
  PolyGen g(41);
  for (int i = 0; i < 300; ++i) {
    auto c = g.with_known_roots(5, 3, 2);
    ExactRootCounts expected;
    for (const auto& [r, m] : c.roots) {
      if (r.sign() > 0) expected.positive += m;
      if (r.sign() < 0) expected.negative += m;
      if (r.sign() == 0) expected.zero += m;
    }
    auto got = exact_root_counts(c.poly);
    EXPECT_EQ(got, expected);
    const std::size_t deg = *c.poly.degree();
    EXPECT_EQ((deg - got.positive - got.negative - got.zero) % 2, 0u);
    EXPECT_EQ(deg - got.positive - got.negative - got.zero, 2 * c.complex_pairs);
  }
}

TEST(SturmProperty, ChainShapeAndTranslation) {
  PolyGen g(42);
  for (int i = 0; i < 200; ++i) {
    auto p = g.dense(1, 10);
    auto chain = sturm_chain(p);
    EXPECT_LE(chain.size(), *p.degree() + 1);
    EXPECT_TRUE(chain.polys().back().is_constant());
    EXPECT_FALSE(chain.polys().back().is_zero());

    auto a = g.rational(10, 3);
    auto b = g.rational(10, 3);
    if (a > b) std::swap(a, b);
    auto t = g.rational(10, 3);
    auto shifted = sturm_chain(taylor_shift(p, t));
    EXPECT_EQ(count_distinct_roots(chain, a, b), count_distinct_roots(shifted, a - t, b - t));
  }
}

}  // namespace
}  // namespace descartes
