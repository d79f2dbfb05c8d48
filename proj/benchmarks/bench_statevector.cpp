// Copyright 2026 The Snapshot-QAOA Authors
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

#include <cstddef>
#include <cstdint>

#include "sqaoa/experiments.hpp"
#include "sqaoa/statevector.hpp"

namespace {

sqaoa::TfimHamiltonian torus(std::size_t side) {
    return sqaoa::make_torus_hamiltonian({side, side, 1.0, 0.5, 1.0});
}

void BM_MixerLayer(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto psi = sqaoa::StateVector::minus_state(n);
    for (auto _ : state) {
        sqaoa::apply_mixer(psi, 0.1);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.dim()));
}
BENCHMARK(BM_MixerLayer)->DenseRange(10, 20, 2);

void BM_PhaseLayer(benchmark::State &state) {
    const auto h = torus(static_cast<std::size_t>(state.range(0)));
    auto psi = sqaoa::StateVector::minus_state(h.n_qubits());
    for (auto _ : state) {
        sqaoa::apply_phase(psi, 0.1, h);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.dim()));
}
BENCHMARK(BM_PhaseLayer)->Arg(3)->Arg(4);

void BM_Energy(benchmark::State &state) {
    const auto h = torus(static_cast<std::size_t>(state.range(0)));
    const auto psi = sqaoa::run_snapshot_qaoa(h, 4, 2.0).state;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqaoa::energy(psi, h));
    }
}
BENCHMARK(BM_Energy)->Arg(3)->Arg(4);

// E_p(T) on the 3x3 torus; cost grows linearly in p.
void BM_SnapshotEnergy(benchmark::State &state) {
    const auto h = torus(3);
    sqaoa::CircuitEvaluator evaluator(h);
    const auto p = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluator.snapshot_energy(p, static_cast<double>(p)));
    }
}
BENCHMARK(BM_SnapshotEnergy)->RangeMultiplier(4)->Range(1, 1024);

} // namespace
