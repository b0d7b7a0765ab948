// Copyright 2026 The akq Authors
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

#include "akq/adversary.hpp"
#include "akq/ake.hpp"
#include "akq/coherent.hpp"
#include "akq/detection.hpp"

namespace {

akq::Exec exec_of(const benchmark::State &state) {
    return state.range(0) ? akq::Exec::parallel : akq::Exec::serial;
}

void BM_heterodyne_pa(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(akq::heterodyne_pa(10, 4096, 100000, 3, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_heterodyne_pa)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_phase_distribution(benchmark::State &state) {
    for (auto _ : state) {
        akq::PhaseDistribution d(8, akq::min_truncation(8), exec_of(state));
        benchmark::DoNotOptimize(d.normalization());
    }
    state.SetItemsProcessed(state.iterations() * akq::PhaseDistribution::kGridPoints);
}
BENCHMARK(BM_phase_distribution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_sequential_strategy(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(akq::sequential_strategy_pc(8, 20000, 5, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * 20000);
}
BENCHMARK(BM_sequential_strategy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_random_basis(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(akq::random_basis_strategy(16, 9, 50000, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * 50000);
}
BENCHMARK(BM_random_basis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ake_sessions(benchmark::State &state) {
    akq::SessionConfig cfg;
    cfg.k = 16;
    cfg.rng_seed = 11;
    cfg.eve_strategy = akq::EveStrategy::impersonation;
    for (auto _ : state) {
        benchmark::DoNotOptimize(akq::run_ake_sessions(cfg, 64, exec_of(state)));
    }
    state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_ake_sessions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
