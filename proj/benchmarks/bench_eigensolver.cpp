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

#include <string>

#include "sqaoa/eigensolver.hpp"
#include "sqaoa/experiments.hpp"

namespace {

void BM_GroundSpectrum(benchmark::State &state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const auto h = sqaoa::make_torus_hamiltonian({side, side, 1.0, 0.5, 1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqaoa::ground_spectrum(h).ground_energy);
    }
    state.SetLabel(std::to_string(h.n_qubits()) + " qubits");
}
BENCHMARK(BM_GroundSpectrum)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DenseOracle(benchmark::State &state) {
    const auto h = sqaoa::make_torus_hamiltonian({3, 3, 1.0, 0.5, 1.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqaoa::dense_spectrum_oracle(h).front());
    }
}
BENCHMARK(BM_DenseOracle)->Unit(benchmark::kMillisecond);

} // namespace
