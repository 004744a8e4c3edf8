// benchmarks/bench_emd.cpp

// Copyright 2026  The emdsep Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "emdsep/emd.hpp"
#include "emdsep/ensemble.hpp"
#include "emdsep/extrema.hpp"
#include "emdsep/rng.hpp"
#include "emdsep/signal.hpp"

namespace {

using namespace emdsep;

Signal bench_input(int n) {
  Signal s = gaussian_noise(n, 42, 0);
  const Signal tone = synth_sine(440.0, 2.0, 0.0,
                                 static_cast<double>(n) / 8000.0, 8000);
  for (int i = 0; i < n; ++i) s.samples[static_cast<std::size_t>(i)] += tone[i];
  return s;
}

void BM_FindExtrema(benchmark::State& state) {
  const Signal s = bench_input(static_cast<int>(state.range(0)));
  ExtremaSet out;
  for (auto _ : state) {
    find_local_extrema_into(s.samples, out);
    benchmark::DoNotOptimize(out.maxima.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindExtrema)->RangeMultiplier(4)->Range(1024, 16384)->Complexity();

void BM_SiftOnce(benchmark::State& state) {
  const Signal s = bench_input(static_cast<int>(state.range(0)));
  Sifter sifter;
  std::vector<double> mean;
  for (auto _ : state) {
    sifter.mean_envelope(s.samples, mean);
    benchmark::DoNotOptimize(mean.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SiftOnce)->RangeMultiplier(4)->Range(1024, 16384)->Complexity();

void BM_Emd(benchmark::State& state) {
  const Signal s = bench_input(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Decomposition d = emd(s);
    benchmark::DoNotOptimize(d.imfs.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Emd)->RangeMultiplier(4)->Range(1024, 8192)->Complexity();

void BM_Ceemdan(benchmark::State& state) {
  const Signal s = bench_input(4096);
  EnsembleConfig cfg;
  cfg.trials = static_cast<int>(state.range(0));
  cfg.base_seed = 1;
  for (auto _ : state) {
    const EnsembleResult r = ceemdan(s, cfg);
    benchmark::DoNotOptimize(r.decomposition.imfs.size());
  }
}
BENCHMARK(BM_Ceemdan)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
