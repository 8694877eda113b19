// Serial vs OpenMP point loops on the heaviest kernels.

#include "gssf/harness/theorem.hpp"

#include <benchmark/benchmark.h>

using namespace gssf;

namespace {

Execution mode(const benchmark::State& st) { return st.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_TwoSemiResidual(benchmark::State& st) {
  const SigmaField f = synth_sigma(7, builtin_space("sasakian-r5"));
  for (auto _ : st) benchmark::DoNotOptimize(parallelism_residual(ParallelismKind::TwoSemi, f, 0.0, 16, 42, mode(st)));
}

void BM_Validate(benchmark::State& st) {
  Scenario s;
  s.space = "sasakian-r5";
  s.samples = 16;
  for (auto _ : st) benchmark::DoNotOptimize(validate_report(s, mode(st)));
}

void BM_EquivalenceMatrix(benchmark::State& st) {
  Scenario s;
  s.space = "kenmotsu-h5";
  s.embedding = "h3-in-h5-kenmotsu";
  s.samples = 8;
  for (auto _ : st) benchmark::DoNotOptimize(equivalence_matrix(s, mode(st)));
}

}  // namespace

BENCHMARK(BM_TwoSemiResidual)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Validate)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EquivalenceMatrix)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
