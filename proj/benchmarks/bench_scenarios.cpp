#include <benchmark/benchmark.h>

#include "covext/bundled.hpp"
#include "covext/runner.hpp"

using namespace covext;

namespace {

// End to end, one benchmark per bundled scenario.
void register_bundled() {
  for (const auto& b : bundled_scenarios()) {
    const Scenario s = parse_scenario_text(b.text);
    benchmark::RegisterBenchmark(("BM_Scenario/" + std::string(b.name)).c_str(),
                                 [s](benchmark::State& state) {
                                   for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s));
                                 })
        ->Unit(benchmark::kMillisecond);
  }
}

const int kRegistered = (register_bundled(), 0);

}  // namespace
