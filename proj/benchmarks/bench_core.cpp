#include <benchmark/benchmark.h>

#include <random>

#include "quadfrob/cohomology.hpp"
#include "quadfrob/graded_pieces.hpp"
#include "quadfrob/hilbert.hpp"
#include "quadfrob/pushforward.hpp"

using namespace quadfrob;

static void BM_Rref(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  PrimeField f(101);
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::uint32_t> v(0, 100);
  FpMatrix m(f, size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) m.set_raw(r, c, v(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(m.reduced());
}
BENCHMARK(BM_Rref)->Arg(64)->Arg(256);

static void BM_BruteForceA(benchmark::State& state) {
  const auto ctx = QuadricContext::make(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(graded::brute_force_dim(ctx, Algebra::A, ctx.dN()));
}
BENCHMARK(BM_BruteForceA)->Arg(3)->Arg(5);

static void BM_ColonC(benchmark::State& state) {
  const auto ctx = QuadricContext::make(4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(graded::brute_force_dim(ctx, Algebra::C, ctx.dN()));
}
BENCHMARK(BM_ColonC);

static void BM_GammaClosed(benchmark::State& state) {
  for (auto _ : state) {
    for (long i = 1; i <= 4; ++i) benchmark::DoNotOptimize(hilbert::gamma_closed(8, 9, i));
  }
}
BENCHMARK(BM_GammaClosed);

static void BM_Closure(benchmark::State& state) {
  const auto ctx = QuadricContext::make(6, 7, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pushforward::summand_closure(ctx, Summand::line(0)));
}
BENCHMARK(BM_Closure)->Arg(1)->Arg(3);

static void BM_TiltingCrossCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cohomology::cross_validate_tilting(6, 5, 3));
}
BENCHMARK(BM_TiltingCrossCheck);

BENCHMARK_MAIN();
