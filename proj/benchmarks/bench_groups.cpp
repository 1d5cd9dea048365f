#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "covext/braid.hpp"
#include "covext/coset.hpp"

using namespace covext;

namespace {

const Alphabet kAB({"a", "b"});

std::vector<Word> words(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(parse_word(kAB, t));
  return out;
}

// ⟨a, b | a², b³, (ab)^k⟩ is finite for k ≤ 5; k = 5 gives A5.
void BM_ToddCoxeterTriangleGroup(benchmark::State& state) {
  const Presentation a5(kAB, words({"a a", "b b b", "a b a b a b a b a b"}));
  for (auto _ : state) benchmark::DoNotOptimize(todd_coxeter(a5, {}).index());
}
BENCHMARK(BM_ToddCoxeterTriangleGroup);

// Free group of rank 2 against the Schreier generators of a random
// transitive action of the given degree: the index must equal the degree.
void BM_ToddCoxeterSchreier(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<std::uint32_t> a(n), b(n);
  std::iota(a.begin(), a.end(), 0u);
  std::iota(b.begin(), b.end(), 0u);
  std::shuffle(a.begin(), a.end(), rng);
  // b is an n-cycle, so the action is transitive.
  for (std::uint32_t i = 0; i < n; ++i) b[i] = (i + 1) % n;
  const MonodromyRep rep(Presentation::free(kAB), {Permutation(a), Permutation(b)});
  const SchreierData sd = schreier_generators(rep);
  for (auto _ : state) {
    const CosetTable t = todd_coxeter(rep.presentation(), sd.stabilizer_generators);
    if (t.index() != n) state.SkipWithError("index disagrees with degree");
    benchmark::DoNotOptimize(t.index());
  }
}
BENCHMARK(BM_ToddCoxeterSchreier)->Arg(8)->Arg(32)->Arg(128);

void BM_HomSearchB4S3(benchmark::State& state) {
  HomSearchConstraints c;
  c.degree = 3;
  for (auto _ : state) benchmark::DoNotOptimize(hom_search(4, c).size());
}
BENCHMARK(BM_HomSearchB4S3);

void BM_HomSearchTransitive(benchmark::State& state) {
  HomSearchConstraints c;
  c.degree = static_cast<std::size_t>(state.range(0));
  c.require_transitive = true;
  for (auto _ : state) benchmark::DoNotOptimize(hom_search(4, c).size());
}
BENCHMARK(BM_HomSearchTransitive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MinimalExtensionInjective(benchmark::State& state) {
  const MonodromyRep g0 = standard_rep(3);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_extension_degree(g0, 4, 6, FiberMode::Injective));
}
BENCHMARK(BM_MinimalExtensionInjective);

}  // namespace
