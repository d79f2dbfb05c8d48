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

#include "sqaoa/experiments.hpp"
#include "sqaoa/optimizer.hpp"
#include "sqaoa/schedule.hpp"

namespace {

const sqaoa::TfimHamiltonian &instance() {
    static const auto h = sqaoa::make_torus_hamiltonian({3, 3, 1.0, 0.5, 1.0});
    return h;
}

void BM_AdjointGradient(benchmark::State &state) {
    const auto &h = instance();
    const auto p = static_cast<std::size_t>(state.range(0));
    const auto s = sqaoa::make_schedule(p, static_cast<double>(p), sqaoa::normalize(h).c1_hat);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqaoa::energy_and_gradient(h, s.betas, s.gammas).energy);
    }
}
BENCHMARK(BM_AdjointGradient)->RangeMultiplier(4)->Range(1, 64);

void BM_GridSearch(benchmark::State &state) {
    const auto &h = instance();
    const auto p = static_cast<std::size_t>(state.range(0));
    sqaoa::GridSearchOptions options;
    options.workers = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqaoa::grid_search_T(h, p, options).t_star);
    }
}
BENCHMARK(BM_GridSearch)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_RefineBfgs(benchmark::State &state) {
    const auto &h = instance();
    const auto p = static_cast<std::size_t>(state.range(0));
    const auto s = sqaoa::make_schedule(p, static_cast<double>(p), sqaoa::normalize(h).c1_hat);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sqaoa::refine_bfgs(h, s).energy);
    }
}
BENCHMARK(BM_RefineBfgs)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace
