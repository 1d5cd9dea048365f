#include <benchmark/benchmark.h>

#include <random>

#include "covext/cpoly.hpp"
#include "covext/hartogs.hpp"
#include "covext/slice.hpp"

using namespace covext;

namespace {

CPoly random_poly(int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Complex> a(static_cast<std::size_t>(degree) + 1);
  for (auto& c : a) c = Complex(g(rng), g(rng));
  a.back() = 1.0;
  return CPoly(std::move(a));
}

void BM_Roots(benchmark::State& state) {
  const CPoly p = random_poly(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(roots(p).residual_bound);
}
BENCHMARK(BM_Roots)->Arg(3)->Arg(10)->Arg(40);

// w³ − 3w − 2z: simple branch points at z = ±1.
CoverSlice cubic() {
  return CoverSlice(Bivariate{{CPoly{0.0, -2.0}, CPoly{-3.0}, CPoly{}, CPoly{1.0}}});
}

void BM_FullMonodromyCubic(benchmark::State& state) {
  const CoverSlice c = cubic();
  for (auto _ : state) benchmark::DoNotOptimize(full_monodromy(c).steps);
}
BENCHMARK(BM_FullMonodromyCubic)->Unit(benchmark::kMillisecond);

void BM_FullMonodromyRandomTrinomial(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const CoverSlice c(Bivariate{{CPoly{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))},
                                CPoly{Complex(u(rng), u(rng)), Complex(u(rng), u(rng))}, CPoly{}, CPoly{1.0}}});
  for (auto _ : state) benchmark::DoNotOptimize(full_monodromy(c).steps);
}
BENCHMARK(BM_FullMonodromyRandomTrinomial)->Unit(benchmark::kMillisecond);

void BM_LeviSignature(benchmark::State& state) {
  const HartogsParams p{static_cast<int>(state.range(0)), 2, 0.5, 2.0};
  CPoint w(static_cast<std::size_t>(p.n), Complex(0.3, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(levi_signature(w, p));
}
BENCHMARK(BM_LeviSignature)->Arg(3)->Arg(5)->Arg(8);

}  // namespace
