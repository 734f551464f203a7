// Copyright 2026 The graphclif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "graphclif/census.h"
#include "graphclif/rm_codes.h"
#include "graphclif/stabilizer.h"

using namespace graphclif;

namespace {

StabilizerGroup rm_plus(int m) {
    return logical_state_stabilizer(build_css(m), LogicalState::kPlus);
}

void BM_DistanceSerial(benchmark::State &state) {
    StabilizerGroup s = rm_plus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_serial(s));
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << s.n));
}

void BM_DistanceParallel(benchmark::State &state) {
    StabilizerGroup s = rm_plus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(distance_parallel(s));
    }
    state.SetItemsProcessed(state.iterations() * (int64_t{1} << s.n));
}

void BM_GenerateGraphs(benchmark::State &state) {
    int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_graph_codes(static_cast<int>(state.range(0)), true, jobs));
    }
}

void BM_Census(benchmark::State &state) {
    CensusConfig c;
    c.n = static_cast<int>(state.range(0));
    c.jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_census(c).class_count);
    }
}

void BM_CensusSerialReference(benchmark::State &state) {
    CensusConfig c;
    c.n = static_cast<int>(state.range(0));
    std::vector<Graph> graphs = generate_connected_graphs(c.n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_lc_classes_serial(graphs, c).class_count);
    }
}

int max_jobs() {
    return omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_DistanceSerial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceParallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateGraphs)->Args({8, 1})->Args({8, max_jobs()})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->Args({8, 1})->Args({8, max_jobs()})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerialReference)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
