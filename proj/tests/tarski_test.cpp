#include <gtest/gtest.h>

#include <set>

#include "signdet/random.hpp"
#include "signdet/tarski.hpp"

namespace signdet {
namespace {

Poly P(std::initializer_list<Rat> c) { return Poly(c); }

TEST(SignedRemSeqTest, QuadraticAndDerivative) {
  const auto seq = signed_rem_seq(P({-1, 0, 1}), P({0, 2}));
  ASSERT_EQ(seq.polys.size(), 3u);
  EXPECT_EQ(seq.polys[2], P({1}));
}

TEST(SignedRemSeqTest, ZeroSecondEntry) {
  const auto seq = signed_rem_seq(P({0, 1}), Poly{});
  ASSERT_EQ(seq.polys.size(), 1u);
  EXPECT_EQ(seq.polys[0], P({0, 1}));
}

TEST(SignedRemSeqTest, CubicRecordsPositiveScale) {
  const auto seq = signed_rem_seq(P({0, -1, 0, 1}), P({-1, 0, 3}));
  ASSERT_EQ(seq.polys.size(), 4u);
  // exact third term is (2/3) X
  EXPECT_EQ(seq.polys[2] * (1 / seq.scale[2]), P({0, Rat(2, 3)}));
  EXPECT_EQ(seq.polys[3] * (1 / seq.scale[3]), P({1}));
  for (const auto& s : seq.scale) EXPECT_GT(s, 0);
}

TEST(SignedRemSeqTest, RejectsZeroFirst) { EXPECT_THROW(signed_rem_seq(Poly{}, P({1})), std::invalid_argument); }

TEST(SignVariationsTest, Examples) {
  using enum Sign;
  EXPECT_EQ(sign_variations(std::vector{Pos, Neg, Pos}), 2u);
  EXPECT_EQ(sign_variations(std::vector{Pos, Zero, Pos}), 0u);
  EXPECT_EQ(sign_variations(std::vector{Pos, Zero, Neg, Neg, Pos}), 2u);
  EXPECT_EQ(sign_variations(std::vector<Sign>{}), 0u);
}

TEST(TaqTest, Examples) {
  const Poly cubic = P({0, -1, 0, 1});
  EXPECT_EQ(taq(P({1}), P({-1, 0, 1})), 2);
  EXPECT_EQ(taq(P({0, 1}), cubic), 0);
  EXPECT_EQ(taq(P({0, 0, 1}), cubic), 2);
  EXPECT_EQ(taq(P({0, 1}), P({5})), 0);
  EXPECT_EQ(taq(Poly{}, cubic), 0);
  EXPECT_THROW(taq(P({1}), Poly{}), std::invalid_argument);
}

TEST(TaqTest, RepeatedRootsCountOnce) {
  // (X-1)^2 (X+1)
  const Poly p0 = P({-1, 1}) * P({-1, 1}) * P({1, 1});
  EXPECT_EQ(taq(P({1}), p0), 2);
  EXPECT_EQ(taq(P({0, 1}), p0), 0);
  EXPECT_EQ(taq(P({-1, 1}), p0), -1);
}

TEST(CountRootsTest, Examples) {
  EXPECT_EQ(count_roots_in(P({-2, 0, 1}), 1, 2), 1u);
  EXPECT_EQ(count_roots_in(P({-2, 0, 1}), 3, 4), 0u);
  EXPECT_EQ(count_roots_in(P({0, -1, 0, 1}), -2, 2), 3u);
  EXPECT_THROW(count_roots_in(P({-2, 0, 1}), 2, 1), std::invalid_argument);
  EXPECT_THROW(count_roots_in(P({0, -1, 0, 1}), 0, 2), std::invalid_argument);
}

struct RootedCase {
  Poly p0;
  std::vector<Rat> roots;  // distinct
};

RootedCase random_rooted(Rng& rng) {
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_int_distribution<long> num(-8, 8), den(1, 3);
  std::uniform_int_distribution<int> mult(1, 2);
  RootedCase out;
  std::set<Rat> roots;
  out.p0 = P({1});
  const int k = count(rng);
  for (int j = 0; j < k; ++j) {
    Rat a(num(rng), den(rng));
    a.canonicalize();
    roots.insert(a);
    for (int e = mult(rng); e > 0; --e) out.p0 = out.p0 * P({-a, 1});
  }
  // a factor without real roots
  if (count(rng) % 2) out.p0 = out.p0 * P({1 + count(rng), 0, 1});
  out.roots.assign(roots.begin(), roots.end());
  return out;
}

TEST(TaqPropertyTest, EqualsSumOfSignsAtRoots) {
  Rng rng(21);
  for (int n = 0; n < 300; ++n) {
    const auto c = random_rooted(rng);
    const Poly q = random_poly(rng, 6, 6);
    long expected = 0;
    for (const auto& x : c.roots) expected += to_int(sign_at(q, x));
    EXPECT_EQ(taq(q, c.p0), expected);
    EXPECT_EQ(taq(P({1}), c.p0), static_cast<long>(c.roots.size()));
  }
}

TEST(TaqPropertyTest, InvariantUnderModReduceAndPositiveScaling) {
  Rng rng(22);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int n = 0; n < 300; ++n) {
    const Poly p0 = random_nonzero_poly(rng, deg(rng), 10);
    const Poly q = random_poly(rng, 12, 10);
    const Poly reduced = mod_reduce(q, p0);
    if (!reduced.is_zero()) EXPECT_EQ(taq(q, p0), taq(reduced, p0));
    EXPECT_EQ(taq(q, p0), taq(q * Rat(7, 3), p0));
  }
}

}  // namespace
}  // namespace signdet
