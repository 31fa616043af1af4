#include <benchmark/benchmark.h>

#include "isonemal/analysis.hpp"
#include "isonemal/enumeration.hpp"
#include "isonemal/species.hpp"

namespace {

using namespace isonemal;
using T = SpeciesTag;

void BM_Orbits(benchmark::State& state) {
  const GroupSpec g = group_for({T::s5_e, 4, 5});
  for (auto _ : state) benchmark::DoNotOptimize(orbits(g));
}
BENCHMARK(BM_Orbits);

void BM_EnumerateFamily(benchmark::State& state) {
  const GroupSpec g = group_for({T::s5_e, static_cast<int>(state.range(0)), 3});
  EnumerationOptions o;
  o.analyze = false;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_family(g, o));
}
BENCHMARK(BM_EnumerateFamily)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CanonicalKey(benchmark::State& state) {
  const auto r = enumerate_family(group_for({T::s8_e, 2, 4}));
  const Design d = r.entries.front().design;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(d, {}));
}
BENCHMARK(BM_CanonicalKey);

void BM_IsIsonemal(benchmark::State& state) {
  const auto r = enumerate_family(group_for({T::s8_e, 2, 4}));
  const Design d = r.entries.front().design;
  for (auto _ : state) benchmark::DoNotOptimize(is_isonemal(d));
}
BENCHMARK(BM_IsIsonemal);

void BM_FullSymmetryGroup(benchmark::State& state) {
  const auto r = enumerate_family(group_for({T::s6, 1, 8}));
  const Design d = r.entries.front().design;
  for (auto _ : state) benchmark::DoNotOptimize(full_symmetry_group(d));
}
BENCHMARK(BM_FullSymmetryGroup);

}  // namespace

BENCHMARK_MAIN();
