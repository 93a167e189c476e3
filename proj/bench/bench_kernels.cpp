// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "asc/checker.hpp"
#include "asc/search.hpp"

namespace {

// Densest k = 4 member with six unit items and the dummy.
asc::Instance dense_member() {
  asc::FamilySpec spec{4, 7, {0b0011u, 0b0101u, 0b0110u, 0b1001u, 0b1010u, 0b1100u}};
  return spec.instantiate(0.6);
}

void BM_SubmodularSerial(benchmark::State& state) {
  const asc::Instance inst = dense_member();
  for (auto _ : state) {
    benchmark::DoNotOptimize(asc::check_adaptive_submodular_serial(inst));
  }
}
BENCHMARK(BM_SubmodularSerial)->Unit(benchmark::kMillisecond);

void BM_SubmodularParallel(benchmark::State& state) {
  const asc::Instance inst = dense_member();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(asc::check_adaptive_submodular(inst, threads));
  }
}
BENCHMARK(BM_SubmodularParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

asc::SearchOptions coarse(int threads) {
  asc::SearchOptions options;
  options.maximize.step = 0.01;
  options.threads = threads;
  return options;
}

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(asc::search_worst_serial(4, 4, coarse(1)));
  }
}
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);

void BM_SearchParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(asc::search_worst(4, 4, coarse(threads)));
  }
}
BENCHMARK(BM_SearchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
