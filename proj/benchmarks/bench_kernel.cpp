// Copyright 2026 The wfemu Authors.
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

#include <benchmark/benchmark.h>

#include "wfemu/circuits.hpp"
#include "wfemu/kernel.hpp"

using namespace wfemu;

namespace {

// One gate application over the full state. Args: format index, n.
void BM_ApplyRy(benchmark::State &state) {
    const NumberFormat fmt = kAllFormats[state.range(0)];
    const int n = static_cast<int>(state.range(1));
    const Instruction ins = lower(GateSpec::ry(n / 2, 0.7), fmt)[0];
    const StateVector src = run(build_rqc(n, 2, 3), fmt, InitOptions{false});
    StateVector dst(n, fmt);
    for (auto _ : state) {
        apply_single(ins, src, dst);
        benchmark::DoNotOptimize(dst.amplitudes().data());
        state.PauseTiming();
        dst = StateVector(n, fmt);
        state.ResumeTiming();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
    state.SetLabel(fmt.name());
}

void BM_ApplyCx(benchmark::State &state) {
    const NumberFormat fmt = kAllFormats[state.range(0)];
    const int n = static_cast<int>(state.range(1));
    const Instruction ins = lower(GateSpec::cx(0, n - 1), fmt)[0];
    const StateVector src = run(build_rqc(n, 2, 3), fmt, InitOptions{false});
    StateVector dst(n, fmt);
    for (auto _ : state) {
        apply_cx(ins, src, dst);
        benchmark::DoNotOptimize(dst.amplitudes().data());
        state.PauseTiming();
        dst = StateVector(n, fmt);
        state.ResumeTiming();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
    state.SetLabel(fmt.name());
}

// Whole QFT session, ping/pong included.
void BM_QftSession(benchmark::State &state) {
    const NumberFormat fmt = kAllFormats[state.range(0)];
    const int n = static_cast<int>(state.range(1));
    const Program p = lower(build_qft(n), fmt);
    for (auto _ : state)
        benchmark::DoNotOptimize(run(p, InitOptions{false}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()));
    state.SetLabel(fmt.name());
}

} // namespace

BENCHMARK(BM_ApplyRy)->ArgsProduct({benchmark::CreateDenseRange(0, 5, 1), {10, 16}});
BENCHMARK(BM_ApplyCx)->ArgsProduct({benchmark::CreateDenseRange(0, 5, 1), {10, 16}});
BENCHMARK(BM_QftSession)->ArgsProduct({benchmark::CreateDenseRange(0, 5, 1), {8, 12}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
