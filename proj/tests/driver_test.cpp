#include <gtest/gtest.h>

#include "signdet/driver.hpp"
#include "signdet/oracle.hpp"
#include "signdet/random.hpp"
#include "signdet/tarski.hpp"

namespace signdet {
namespace {

Poly P(std::initializer_list<Rat> c) { return Poly(c); }

const Poly kCubic = P({0, -1, 0, 1});

SignDetRow row(std::initializer_list<int> signs, std::size_t count) { return {SignCond::of(signs), count}; }

TEST(SinglePolyFeasibleTest, LinearOnCubic) {
  const auto res = single_poly_feasible(P({0, 1}), kCubic);
  EXPECT_EQ(res.queries, (std::array<long, 3>{3, 0, 2}));
  EXPECT_EQ(res.counts, (std::array<std::size_t, 3>{1, 1, 1}));
  EXPECT_EQ(res.feasible, (std::vector<Sign>{Sign::Zero, Sign::Pos, Sign::Neg}));
}

TEST(SinglePolyFeasibleTest, PositiveEverywhere) {
  const auto res = single_poly_feasible(P({1, 0, 1}), kCubic);
  EXPECT_EQ(res.counts, (std::array<std::size_t, 3>{0, 3, 0}));
  EXPECT_EQ(res.feasible, (std::vector<Sign>{Sign::Pos}));
  EXPECT_LT(res.max_query_degree, kCubic.degree());
}

TEST(SinglePolyFeasibleTest, NoRealRoots) {
  const auto res = single_poly_feasible(P({0, 1}), P({1, 0, 1}));
  EXPECT_TRUE(res.feasible.empty());
  EXPECT_EQ(res.counts, (std::array<std::size_t, 3>{0, 0, 0}));
}

TEST(SinglePolyFeasibleTest, RejectsZeroP0) { EXPECT_THROW(single_poly_feasible(P({1}), Poly{}), std::invalid_argument); }

TEST(ProductsForAdaTest, Examples) {
  const std::vector<Poly> two = {P({0, 1}), P({2, 1})};
  EXPECT_EQ(products_for_ada({MultiDeg::of({0, 0})}, two, kCubic), (std::vector<Poly>{P({1})}));
  EXPECT_EQ(products_for_ada({MultiDeg::of({1, 0}), MultiDeg::of({0, 1})}, two, kCubic), two);
  const std::vector<Poly> sq = {P({0, 0, 1})};
  EXPECT_EQ(products_for_ada({MultiDeg::of({2})}, sq, kCubic), (std::vector<Poly>{P({0, 0, 1})}));
}

TEST(IncrementalTest, Examples) {
  const std::vector<Poly> one = {P({0, 1})};
  auto res = signdet_incremental(kCubic, one);
  EXPECT_EQ(res.m, 3u);
  EXPECT_EQ(res.rows, (std::vector<SignDetRow>{row({0}, 1), row({1}, 1), row({-1}, 1)}));

  const std::vector<Poly> two = {P({0, 1}), P({2, 1})};
  res = signdet_incremental(kCubic, two);
  EXPECT_EQ(res.rows, (std::vector<SignDetRow>{row({0, 1}, 1), row({1, 1}, 1), row({-1, 1}, 1)}));

  const std::vector<Poly> vanishing = {P({-2, 0, 1})};
  res = signdet_incremental(P({-2, 0, 1}), vanishing);
  EXPECT_EQ(res.rows, (std::vector<SignDetRow>{row({0}, 2)}));
}

TEST(IncrementalTest, NoRootsAndNoPolys) {
  const std::vector<Poly> one = {P({0, 1})};
  EXPECT_TRUE(signdet_incremental(P({1, 0, 1}), one).rows.empty());
  const auto res = signdet_incremental(kCubic, {});
  ASSERT_EQ(res.rows.size(), 1u);
  EXPECT_EQ(res.rows[0].signs.size(), 0u);
  EXPECT_EQ(res.rows[0].count, 3u);
  EXPECT_THROW(signdet_incremental(Poly{}, one), std::invalid_argument);
}

TEST(IncrementalTest, ZeroPolynomialOnlyVanishes) {
  const std::vector<Poly> polys = {Poly{}, P({0, 1})};
  const auto res = signdet_incremental(kCubic, polys);
  EXPECT_EQ(res.rows, (std::vector<SignDetRow>{row({0, 0}, 1), row({0, 1}, 1), row({0, -1}, 1)}));
}

TEST(NaiveTest, Examples) {
  const std::vector<Poly> one = {P({0, 1})};
  EXPECT_TRUE(same_rows(signdet_naive(kCubic, one), signdet_incremental(kCubic, one)));
  const auto empty = signdet_naive(kCubic, {});
  ASSERT_EQ(empty.rows.size(), 1u);
  EXPECT_EQ(empty.rows[0].count, 3u);
  EXPECT_TRUE(signdet_naive(P({1, 0, 1}), one).rows.empty());
  const std::vector<Poly> seven(7, P({0, 1}));
  EXPECT_THROW(signdet_naive(kCubic, seven), std::invalid_argument);
}

TEST(DriverPropertyTest, AgreesWithOraclesAndKeepsInvariants) {
  Rng rng(51);
  for (int n = 0; n < 150; ++n) {
    const int degree = std::uniform_int_distribution<int>(1, 10)(rng);
    const std::size_t s = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const auto inst = (n % 2) ? random_rooted_instance(rng, degree, s, 20) : random_instance(rng, degree, s, 20);
    const auto inc = signdet_incremental(inst.p0, inst.polys);
    EXPECT_TRUE(same_rows(inc, signdet_bruteforce(inst.p0, inst.polys))) << "instance " << n;
    if (s <= 3) EXPECT_TRUE(same_rows(inc, signdet_naive(inst.p0, inst.polys))) << "instance " << n;

    EXPECT_EQ(static_cast<long>(inc.m), taq(P({1}), inst.p0));
    std::size_t total = 0;
    for (std::size_t k = 0; k < inc.rows.size(); ++k) {
      EXPECT_GE(inc.rows[k].count, 1u);
      total += inc.rows[k].count;
      if (k) EXPECT_LT(inc.rows[k - 1].signs, inc.rows[k].signs);
    }
    if (inc.m > 0) EXPECT_EQ(total, inc.m);
    for (const auto& st : inc.trace) {
      EXPECT_LE(st.r, 3 * inc.m);
      EXPECT_EQ(st.ada_size, st.r);
      EXPECT_LE(st.ops, st.budget);
      EXPECT_LT(st.max_query_degree, inst.p0.degree());
      Rat sum = 0;
      for (const auto& c : st.counts) {
        EXPECT_TRUE(c >= 0 && is_integer(c));
        sum += c;
      }
      EXPECT_EQ(sum, Rat(static_cast<long>(inc.m)));
    }
  }
}

TEST(DriverPropertyTest, OptimizedStepGivesSameRows) {
  Rng rng(52);
  for (int n = 0; n < 60; ++n) {
    const auto inst = random_rooted_instance(rng, 12, 4, 20);
    const auto plain = signdet_incremental(inst.p0, inst.polys);
    const auto opt = signdet_incremental(inst.p0, inst.polys, {.solve = {.optimized_step22 = true}});
    EXPECT_TRUE(same_rows(plain, opt));
    ASSERT_EQ(plain.trace.size(), opt.trace.size());
    for (std::size_t k = 0; k < plain.trace.size(); ++k) EXPECT_LE(opt.trace[k].ops, plain.trace[k].ops);
  }
}

}  // namespace
}  // namespace signdet
