#include <benchmark/benchmark.h>

#include "signdet/driver.hpp"
#include "signdet/random.hpp"
#include "signdet/solver.hpp"

namespace {

using namespace signdet;

SignList sigma_of_size(std::size_t r) {
  Rng rng(r);
  std::size_t length = 1;
  for (std::size_t cap = 3; cap < 2 * r; cap *= 3) ++length;
  return random_sign_list(rng, length, r);
}

void BM_Auxlinsolve(benchmark::State& state) {
  const SolvePlan plan(sigma_of_size(static_cast<std::size_t>(state.range(0))));
  Rng rng(7);
  std::vector<Rat> t(plan.size());
  for (auto& v : t) v = static_cast<long>(rng() % 101) - 50;
  const SolveOptions opts{.optimized_step22 = state.range(1) != 0};
  std::uint64_t ops = 0;
  for (auto _ : state) {
    OpCounter counter;
    benchmark::DoNotOptimize(auxlinsolve(plan, t, counter, opts));
    ops = counter.count();
  }
  const double r = static_cast<double>(plan.size());
  state.counters["ops"] = static_cast<double>(ops);
  state.counters["ops/2r^2"] = static_cast<double>(ops) / (2 * r * r);
}
BENCHMARK(BM_Auxlinsolve)->ArgsProduct({{16, 64, 200, 500}, {0, 1}});

void BM_DenseSolve(benchmark::State& state) {
  const auto sigma = sigma_of_size(static_cast<std::size_t>(state.range(0)));
  const auto m = to_rat(mat(ada(sigma), sigma));
  std::vector<Rat> t(sigma.size(), Rat(1));
  for (auto _ : state) benchmark::DoNotOptimize(solve_dense(m, t));
}
BENCHMARK(BM_DenseSolve)->Arg(16)->Arg(64);

void BM_Incremental(benchmark::State& state) {
  Rng rng(11);
  const auto inst = random_rooted_instance(rng, static_cast<int>(state.range(0)), 4, 20);
  for (auto _ : state) benchmark::DoNotOptimize(signdet_incremental(inst.p0, inst.polys));
}
BENCHMARK(BM_Incremental)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
