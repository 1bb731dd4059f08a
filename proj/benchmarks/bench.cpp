#include <benchmark/benchmark.h>

#include "deltaritz/analysis.hpp"
#include "deltaritz/assembly.hpp"
#include "deltaritz/eigensolver.hpp"

namespace {

using namespace deltaritz;

void BM_Assemble(benchmark::State& state) {
  const PrecisionContext ctx(50);
  const Preset p = preset(PresetKind::Quartic);
  const BasisSpec spec{p.width, static_cast<std::size_t>(state.range(0)), 1.0, Sector::EvenAdapted};
  for (auto _ : state) benchmark::DoNotOptimize(assemble(p.potential, spec, ctx));
}
BENCHMARK(BM_Assemble)->Arg(6)->Arg(11)->Arg(17);

void BM_Solve(benchmark::State& state) {
  const PrecisionContext ctx(50);
  const Preset p = preset(PresetKind::Quartic);
  const BasisSpec spec{p.width, static_cast<std::size_t>(state.range(0)), 1.0, Sector::EvenAdapted};
  const AssembledSystem system = assemble(p.potential, spec, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(solve_generalized(system, ctx));
}
BENCHMARK(BM_Solve)->Arg(6)->Arg(11)->Arg(17);

void BM_HarmonicTable(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  const Preset p = preset(PresetKind::Harmonic);
  for (auto _ : state) benchmark::DoNotOptimize(convergence_table(p.potential, 1.0, p.width, 11, 5, ctx));
}
BENCHMARK(BM_HarmonicTable)->Arg(50)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_CriticalCoupling(benchmark::State& state) {
  const PrecisionContext ctx(50);
  const Preset p = preset(PresetKind::Cubic);
  for (auto _ : state) benchmark::DoNotOptimize(critical_coupling(p.potential, p.width, 17, ctx));
}
BENCHMARK(BM_CriticalCoupling)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
