// Copyright 2026 The wheelembed Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "wheelembed/families.hpp"
#include "wheelembed/graph.hpp"
#include "wheelembed/hamiltonian.hpp"
#include "wheelembed/oracle.hpp"

namespace {

using namespace wheelembed;

void BM_AllPairsSerial(benchmark::State& state) {
  const Graph g = hypertree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances_serial(g));
}
BENCHMARK(BM_AllPairsSerial)->Arg(8)->Arg(10);

void BM_AllPairsParallel(benchmark::State& state) {
  const Graph g = hypertree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_AllPairsParallel)->Arg(8)->Arg(10);

void BM_OracleWirelengthSerial(benchmark::State& state) {
  const Graph guest = wheel(8);
  const Graph host = circulant(8, {1, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_metric_serial(Metric::wirelength, guest, host));
  }
}
BENCHMARK(BM_OracleWirelengthSerial)->Unit(benchmark::kMillisecond);

void BM_OracleWirelengthParallel(benchmark::State& state) {
  const Graph guest = wheel(8);
  const Graph host = circulant(8, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(exact_wirelength(guest, host));
}
BENCHMARK(BM_OracleWirelengthParallel)->Unit(benchmark::kMillisecond);

void BM_OracleCongestionSerial(benchmark::State& state) {
  const Graph guest = windmill(4);
  const Graph host = circulant(8, {1, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_metric_serial(Metric::congestion, guest, host));
  }
}
BENCHMARK(BM_OracleCongestionSerial)->Unit(benchmark::kMillisecond);

void BM_OracleCongestionParallel(benchmark::State& state) {
  const Graph guest = windmill(4);
  const Graph host = circulant(8, {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(exact_congestion(guest, host));
}
BENCHMARK(BM_OracleCongestionParallel)->Unit(benchmark::kMillisecond);

void BM_FaultSweepSerial(benchmark::State& state) {
  const Graph g = circulant(static_cast<int>(state.range(0)), {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(is_f_fault_hamiltonian_serial(g, 2));
}
BENCHMARK(BM_FaultSweepSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_FaultSweepParallel(benchmark::State& state) {
  const Graph g = circulant(static_cast<int>(state.range(0)), {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(is_f_fault_hamiltonian(g, 2));
}
BENCHMARK(BM_FaultSweepParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
