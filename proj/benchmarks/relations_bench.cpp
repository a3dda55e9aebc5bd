#include <benchmark/benchmark.h>

#include "lderiv/lattice.hpp"
#include "lderiv/relations.hpp"

using namespace lderiv;

static void BM_LllRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(1);
  IntMatrix base(n, std::vector<mpz_class>(n));
  for (auto& row : base) {
    for (auto& x : row) x = rng.get_z_bits(64) - (mpz_class(1) << 63);
  }
  for (auto _ : state) {
    IntMatrix b = base;
    lll_reduce(b);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_LllRandom)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_FindRelation(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  const int d = static_cast<int>(state.range(1));
  const auto basis = log_sine_basis(q, d, LogSineOptions{false, true});
  for (auto _ : state) benchmark::DoNotOptimize(find_integer_relation(basis, 4, d));
}
BENCHMARK(BM_FindRelation)->Args({55, 60})->Args({55, 120})->Args({93, 80})->Unit(benchmark::kMillisecond);

static void BM_Witness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_witness(state.range(0), Rational(0), 100));
}
BENCHMARK(BM_Witness)->Arg(55)->Arg(155)->Unit(benchmark::kMillisecond);
