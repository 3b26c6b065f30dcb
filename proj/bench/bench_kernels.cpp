#include <benchmark/benchmark.h>

#include "icvp/betti.hpp"
#include "icvp/genfun.hpp"
#include "icvp/ic_core.hpp"

using namespace icvp;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "omp" : "serial"); }

template <Family F, int Rank>
void BM_DifferencePoly(benchmark::State& state) {
  IcEngine engine({.execution = mode(state)});
  const SimpleType type = SimpleType::make(F, Rank);
  engine.poincare(type);
  for (auto _ : state) benchmark::DoNotOptimize(engine.difference_poly(type));
  label(state);
}

void BM_TypeAFastPath(benchmark::State& state) {
  for (auto _ : state) {
    IcEngine engine({.execution = mode(state)});
    benchmark::DoNotOptimize(engine.poincare_type_a(static_cast<int>(state.range(1))));
  }
  label(state);
}

void BM_CompositionSums(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) ? composition_sums_omp(n) : composition_sums_serial(n));
  }
  label(state);
}

void BM_Psi(benchmark::State& state) {
  IcEngine engine({.execution = mode(state)});
  for (auto _ : state) benchmark::DoNotOptimize(psi(engine, 60, static_cast<int>(state.range(1))));
  label(state);
}

}  // namespace

BENCHMARK(BM_DifferencePoly<Family::E, 7>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DifferencePoly<Family::E, 8>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DifferencePoly<Family::A, 11>)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TypeAFastPath)->Args({0, 24})->Args({1, 24})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompositionSums)->Args({0, 22})->Args({1, 22})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Psi)->Args({0, 16})->Args({1, 16})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
