// Serial reference versus OpenMP kernels: chamber enumeration, regular search, catalog.

#include <benchmark/benchmark.h>

#include "tempered/arrangement.hpp"
#include "tempered/catalog.hpp"
#include "tempered/constructors.hpp"
#include "tempered/criteria.hpp"

using namespace tempered;

namespace {

Arrangement sl4_so5_arrangement() {
  const RootedAlgebra ra = direct_sum(make_sl(4), make_so(5));
  return Arrangement{ra.roots.rank(), distinct_hyperplanes(ra.roots.roots)};
}

void BM_ChambersReference(benchmark::State& state) {
  const Arrangement a = sl4_so5_arrangement();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers_reference(a));
}
BENCHMARK(BM_ChambersReference)->Unit(benchmark::kMillisecond);

void BM_Chambers(benchmark::State& state) {
  const Arrangement a = sl4_so5_arrangement();
  const Parallelism par{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(a, 1000000, par));
}
BENCHMARK(BM_Chambers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AgsSampling(benchmark::State& state) {
  const RootedAlgebra ra = make_sl(4);
  const Parabolic p = parabolic(*ra.algebra, ra.roots, {2});
  CriteriaConfig config;
  config.trials = 64;
  config.parallelism.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_ags(*ra.algebra, p.levi, config));
}
BENCHMARK(BM_AgsSampling)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Catalog(benchmark::State& state) {
  const auto specs = builtin_catalog();
  CriteriaConfig config;
  config.parallelism.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_catalog(specs, config));
}
BENCHMARK(BM_Catalog)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
