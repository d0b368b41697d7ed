// Copyright 2026 The ctxflow Authors
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

#include "ctxflow/analysis.h"
#include "ctxflow/classical.h"
#include "ctxflow/network.h"
#include "ctxflow/random.h"

namespace {

using namespace ctxflow;

void BM_CanonicalNetwork(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_network());
    }
}
BENCHMARK(BM_CanonicalNetwork);

void BM_NetworkUnitary(benchmark::State &state) {
    auto net = canonical_network();
    for (auto _ : state) {
        benchmark::DoNotOptimize(network_unitary(net));
    }
}
BENCHMARK(BM_NetworkUnitary);

void BM_WeakValueTable(benchmark::State &state) {
    auto net = canonical_network();
    auto psi = nx_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(weak_value_table(psi, net));
    }
}
BENCHMARK(BM_WeakValueTable);

void BM_ContinuityCheck(benchmark::State &state) {
    auto net = canonical_network();
    CounterRng rng(7);
    auto psi = random_state(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(continuity_check(psi, net));
    }
}
BENCHMARK(BM_ContinuityCheck);

void BM_SampleDetections(benchmark::State &state) {
    auto net = canonical_network();
    auto out = contexts(net).back();
    auto psi = nx_state();
    auto shots = static_cast<uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_detections(psi, net, out, shots, 42));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleDetections)->Arg(1000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_EnumerateTrajectories(benchmark::State &state) {
    auto net = canonical_network();
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_trajectories(net));
    }
}
BENCHMARK(BM_EnumerateTrajectories);

void BM_ClassicalClaim(benchmark::State &state) {
    auto net = canonical_network();
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_classical_claim(net));
    }
}
BENCHMARK(BM_ClassicalClaim);

}  // namespace

BENCHMARK_MAIN();
