#include <gtest/gtest.h>

#include "signdet/random.hpp"
#include "signdet/solver.hpp"

namespace signdet {
namespace {

SignList list(std::initializer_list<std::initializer_list<int>> conds) {
  std::vector<SignCond> v;
  for (auto c : conds) v.push_back(SignCond::of(c));
  return SignList(std::move(v));
}

std::vector<Rat> rats(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

const SignList kFourByFour = list({{0, 0}, {0, 1}, {1, 0}, {-1, 1}});

std::size_t capacity(std::size_t length) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < length; ++k) c *= 3;
  return c;
}

SignList random_list(Rng& rng, std::size_t min_len, std::size_t max_len, std::size_t max_r) {
  const std::size_t length = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
  const std::size_t r = std::uniform_int_distribution<std::size_t>(1, std::min(max_r, capacity(length)))(rng);
  return random_sign_list(rng, length, r);
}

std::vector<Rat> random_vec(Rng& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<Rat> x(n);
  for (auto& v : x) v = dist(rng);
  return x;
}

// Right-hand side mat(ada(Σ), Σ) x computed densely.
std::vector<Rat> rhs(const SignList& sigma, const std::vector<Rat>& x) {
  return to_rat(mat(ada(sigma), sigma)).apply(x);
}

std::vector<Rat> permute(const std::vector<Rat>& x, const std::vector<std::size_t>& order) {
  std::vector<Rat> out;
  for (auto j : order) out.push_back(x[j]);
  return out;
}

TEST(BaseSolveTest, Examples) {
  OpCounter ops;
  EXPECT_EQ(base_solve(list({{0}, {1}, {-1}}), rats({3, 0, 2}), ops), rats({1, 1, 1}));
  EXPECT_LE(ops.count(), 15u);
  ops.reset();
  EXPECT_EQ(base_solve(list({{1}, {-1}}), rats({2, 0}), ops), rats({1, 1}));
  EXPECT_LE(ops.count(), 6u);
}

TEST(BaseSolveTest, InversesMultiplyToIdentity) {
  for (const auto& sigma : {list({{0}}), list({{0}, {1}}), list({{0}, {-1}}), list({{1}, {-1}}),
                            list({{0}, {1}, {-1}}), list({{1}}), list({{-1}})}) {
    const auto m = to_rat(mat(ada(sigma), sigma));
    EXPECT_TRUE((base_inverse(sigma) * m).is_identity()) << sigma.size();
    EXPECT_TRUE((m * base_inverse(sigma)).is_identity()) << sigma.size();
  }
  EXPECT_THROW(base_inverse(list({{0, 1}})), std::invalid_argument);
}

TEST(AuxlinsolveTest, FourConditionExample) {
  const auto t = rhs(kFourByFour, rats({1, 1, 1, 1}));
  EXPECT_EQ(t, rats({4, 2, 0, -1}));
  OpCounter ops;
  EXPECT_EQ(auxlinsolve(kFourByFour, t, ops), rats({1, 1, 1, 1}));
  EXPECT_LE(ops.count(), 32u);
}

TEST(AuxlinsolveTest, SingleLevelDelegatesToBase) {
  OpCounter a, b;
  EXPECT_EQ(auxlinsolve(list({{0}, {1}, {-1}}), rats({3, 0, 2}), a), rats({1, 1, 1}));
  base_solve(list({{0}, {1}, {-1}}), rats({3, 0, 2}), b);
  EXPECT_EQ(a.count(), b.count());
}

TEST(AuxlinsolveTest, RejectsLengthMismatch) {
  OpCounter ops;
  EXPECT_THROW(auxlinsolve(kFourByFour, rats({1, 2}), ops), std::invalid_argument);
}

TEST(AfterStepStateTest, FourConditionExample) {
  const auto x = rats({1, 1, 1, 1});
  const auto t = rhs(kFourByFour, x);
  const auto order = partition(kFourByFour).block_order();
  EXPECT_EQ(after_step_state(kFourByFour, t, 0), t);
  EXPECT_EQ(after_step_state(kFourByFour, t, 9), x);
  const auto n = factors(kFourByFour);
  const auto dense = (n[1] * n[0] * to_rat(mat(ada(kFourByFour), block_ordered(kFourByFour)))).apply(permute(x, order));
  EXPECT_EQ(after_step_state(kFourByFour, t, 2), dense);
}

TEST(SolverPropertyTest, ExactSolutionWithinBudget) {
  Rng rng(41);
  for (int n = 0; n < 300; ++n) {
    const auto sigma = random_list(rng, 1, 6, 200);
    const auto x = random_vec(rng, sigma.size(), 20);
    const auto t = rhs(sigma, x);
    const SolvePlan plan(sigma);
    OpCounter ops;
    EXPECT_EQ(auxlinsolve(plan, t, ops), x);
    const auto r = sigma.size();
    EXPECT_LE(ops.count(), 2 * r * r) << "r=" << r;
    if (plan.is_base()) EXPECT_LE(ops.count(), r * (2 * r - 1));
  }
}

TEST(SolverPropertyTest, PerStepBounds) {
  Rng rng(42);
  for (int n = 0; n < 300; ++n) {
    const auto sigma = random_list(rng, 2, 6, 200);
    const auto v = partition(sigma);
    auto sz = [&](Part p) -> std::uint64_t { return v.part(p).size(); };
    const auto r0 = sz(Part::Zero), r1 = sz(Part::Pos), rm = sz(Part::Neg);
    const auto r01 = sz(Part::ZeroPos_Zero), r0m = sz(Part::ZeroNeg_Zero), r1m = sz(Part::PosNeg_Pos);
    const auto r01m = sz(Part::All_Zero);
    const std::array<std::uint64_t, 10> bound = {
        0,
        2 * (r0 + r1 + rm + r01 + r0m + r1m + r01m) * (r0 + r1 + rm + r01 + r0m + r1m + r01m),
        2 * (r01 + r0m + r1m + 2 * r01m) * (r1 + rm + r1m),
        2 * (r01 + r0m + r1m + r01m) * (r01 + r0m + r1m + r01m),
        r0m + r1m,
        2 * r01m * (r01 + r0m + r01m),
        2 * r01m * r01m,
        r01m,
        r01m,
        r01 + r0m + r1m + 2 * r01m,
    };
    for (bool optimized : {false, true}) {
      OpCounter ops;
      auxlinsolve(sigma, random_vec(rng, sigma.size(), 9), ops, {.optimized_step22 = optimized});
      std::uint64_t total = 0;
      for (int j = 1; j <= 9; ++j) {
        EXPECT_LE(ops.steps()[j], bound[j]) << "step " << j << " r=" << sigma.size();
        total += ops.steps()[j];
      }
      EXPECT_EQ(total, ops.count());
    }
  }
}

TEST(SolverPropertyTest, OptimizedStepAgreesAndIsNotMoreExpensive) {
  Rng rng(43);
  bool strictly_cheaper = false;
  for (int n = 0; n < 300; ++n) {
    const auto sigma = random_list(rng, 2, 6, 200);
    const auto x = random_vec(rng, sigma.size(), 20);
    const auto t = rhs(sigma, x);
    OpCounter plain, opt;
    const auto a = auxlinsolve(sigma, t, plain);
    const auto b = auxlinsolve(sigma, t, opt, {.optimized_step22 = true});
    EXPECT_EQ(a, b);
    EXPECT_LE(opt.count(), plain.count());
    strictly_cheaper = strictly_cheaper || opt.count() < plain.count();
  }
  EXPECT_TRUE(strictly_cheaper);
}

TEST(SolverPropertyTest, IntermediateStatesMatchDenseProducts) {
  Rng rng(44);
  for (int n = 0; n < 40; ++n) {
    const auto sigma = random_list(rng, 2, 5, 50);
    const auto x = random_vec(rng, sigma.size(), 20);
    const auto t = rhs(sigma, x);
    const auto order = partition(sigma).block_order();
    const auto n_k = factors(sigma);
    RatMatrix prod = to_rat(mat(ada(sigma), block_ordered(sigma)));
    const auto xb = permute(x, order);
    EXPECT_EQ(after_step_state(sigma, t, 0), prod.apply(xb));
    for (int j = 1; j <= 9; ++j) {
      prod = n_k[j - 1] * prod;
      for (bool optimized : {false, true})
        EXPECT_EQ(after_step_state(sigma, t, j, {.optimized_step22 = optimized}), prod.apply(xb))
            << "step " << j << " r=" << sigma.size();
    }
  }
}

}  // namespace
}  // namespace signdet
