#include <benchmark/benchmark.h>

#include "homext/extgroup.hpp"
#include "homext/verify.hpp"

using namespace homext;

namespace {

// M = Z/2, N = Z/2+Z/2+Z/2 has five candidate middle modules.
void enumerate_case(benchmark::State& state, bool parallel) {
  const Module M(RingDescriptor::integers(), {2});
  const Module N(RingDescriptor::integers(), {2, 2, 2});
  EnumerateOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_extensions(M, N, opts).classes.size());
}

void BM_EnumerateSerial(benchmark::State& state) { enumerate_case(state, false); }
void BM_EnumerateParallel(benchmark::State& state) { enumerate_case(state, true); }

void verify_case(benchmark::State& state, bool parallel) {
  const Corpus corpus = builtin_corpus();
  VerifyOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(run_verification("psi", corpus, opts).cases.size());
}

void BM_VerifySerial(benchmark::State& state) { verify_case(state, false); }
void BM_VerifyParallel(benchmark::State& state) { verify_case(state, true); }

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
