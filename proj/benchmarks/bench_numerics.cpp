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

#include <random>
#include <vector>

#include "wfemu/numerics.hpp"

using namespace wfemu;

namespace {

std::vector<double> operands(const NumberFormat &fmt, std::size_t count) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> d(-0.9, 0.9);
    std::vector<double> v(count);
    for (double &x : v)
        x = quantize(d(rng), fmt).value();
    return v;
}

// Policy-level complex multiply, the kernel's inner operation.
void BM_ComplexMul(benchmark::State &state) {
    const NumberFormat fmt = kAllFormats[state.range(0)];
    const auto v = operands(fmt, 4096);
    arith::visit(fmt, [&](const auto &ar) {
        double re = 0, im = 0;
        for (auto _ : state) {
            for (std::size_t j = 0; j + 3 < v.size(); j += 4) {
                cmul(ar, v[j], v[j + 1], v[j + 2], v[j + 3], re, im);
                benchmark::DoNotOptimize(re);
                benchmark::DoNotOptimize(im);
            }
        }
    });
    state.SetItemsProcessed(state.iterations() * 1024);
    state.SetLabel(fmt.name());
}

void BM_Quantize(benchmark::State &state) {
    const NumberFormat fmt = kAllFormats[state.range(0)];
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    std::vector<double> v(4096);
    for (double &x : v)
        x = d(rng);
    for (auto _ : state)
        for (double x : v)
            benchmark::DoNotOptimize(quantize(x, fmt));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
    state.SetLabel(fmt.name());
}

} // namespace

BENCHMARK(BM_ComplexMul)->DenseRange(0, 5);
BENCHMARK(BM_Quantize)->DenseRange(0, 5);
