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

#include "wfemu/circuits.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace wfemu {

namespace {

// Uniform integer in [0, bound) by rejection on the raw 64-bit stream.
std::uint64_t draw_below(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double draw_angle(std::mt19937_64 &rng) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2 * std::numbers::pi * unit;
}

void check_capacity(std::size_t gates) {
    if (gates > kContextDepth)
        throw CapacityError("context memory overflow: circuit needs " + std::to_string(gates) +
                            " gates, limit is " + std::to_string(kContextDepth));
}

void controlled_phase(Circuit &c, int control, int target, double theta) {
    c.gates.push_back(GateSpec::rz(control, theta / 2));
    c.gates.push_back(GateSpec::rz(target, theta / 2));
    c.gates.push_back(GateSpec::cx(control, target));
    c.gates.push_back(GateSpec::rz(target, -theta / 2));
    c.gates.push_back(GateSpec::cx(control, target));
}

void swap_qubits(Circuit &c, int a, int b) {
    c.gates.push_back(GateSpec::cx(a, b));
    c.gates.push_back(GateSpec::cx(b, a));
    c.gates.push_back(GateSpec::cx(a, b));
}

} // namespace

std::string_view task_name(Task t) {
    switch (t) {
    case Task::QFT: return "qft";
    case Task::RQC: return "rqc";
    case Task::ZXZ: return "psr";
    }
    return "?";
}

Circuit build_qft(int n) {
    if (n < 1)
        throw std::invalid_argument("QFT needs at least one qubit");
    const auto un = static_cast<std::size_t>(n);
    check_capacity(un + un * (un - 1) + 3 * (un / 2) + 3 * un * (un - 1) / 2);
    Circuit c{n, {}};
    for (int j = 0; j < n; ++j) {
        c.gates.push_back(GateSpec::h(j));
        for (int k = j + 1; k < n; ++k)
            controlled_phase(c, k, j, std::numbers::pi / std::ldexp(1.0, k - j));
    }
    for (int j = 0; j < n / 2; ++j)
        swap_qubits(c, j, n - 1 - j);
    return c;
}

Circuit build_rqc(int n, int depth, std::uint64_t seed) {
    if (n < 1 || depth < 1)
        throw std::invalid_argument("RQC needs n >= 1 and depth >= 1");
    check_capacity(static_cast<std::size_t>(n) * static_cast<std::size_t>(depth));
    static constexpr GateKind kPool[] = {GateKind::H,  GateKind::S,  GateKind::CX,
                                         GateKind::Rx, GateKind::Ry, GateKind::Rz};
    static constexpr GateKind kPoolNoCx[] = {GateKind::H, GateKind::S, GateKind::Rx,
                                             GateKind::Ry, GateKind::Rz};
    const std::span<const GateKind> pool =
        n == 1 ? std::span<const GateKind>(kPoolNoCx) : std::span<const GateKind>(kPool);

    std::mt19937_64 rng(seed);
    Circuit c{n, {}};
    c.gates.reserve(static_cast<std::size_t>(n * depth));
    for (int g = 0; g < n * depth; ++g) {
        GateSpec spec;
        spec.kind = pool[draw_below(rng, pool.size())];
        spec.target = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n)));
        if (spec.kind == GateKind::CX) {
            auto other = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n - 1)));
            spec.control = other >= spec.target ? other + 1 : other;
        } else if (is_rotation(spec.kind)) {
            spec.theta = draw_angle(rng);
        }
        c.gates.push_back(spec);
    }
    return c;
}

Circuit build_zxz(int n, std::span<const double> thetas) {
    if (n < 1)
        throw std::invalid_argument("ZXZ ansatz needs at least one qubit");
    if (thetas.size() != 3 * static_cast<std::size_t>(n))
        throw std::invalid_argument("ZXZ ansatz needs " + std::to_string(3 * n) +
                                    " parameters, got " + std::to_string(thetas.size()));
    check_capacity(thetas.size());
    Circuit c{n, {}};
    for (int q = 0; q < n; ++q) {
        c.gates.push_back(GateSpec::rz(q, thetas[3 * q]));
        c.gates.push_back(GateSpec::rx(q, thetas[3 * q + 1]));
        c.gates.push_back(GateSpec::rz(q, thetas[3 * q + 2]));
    }
    return c;
}

Circuit build(const CircuitRecipe &r) {
    switch (r.task) {
    case Task::QFT: return build_qft(r.n);
    case Task::RQC: return build_rqc(r.n, r.depth, r.seed);
    case Task::ZXZ: return build_zxz(r.n, r.thetas);
    }
    throw std::invalid_argument("unknown task");
}

std::vector<double> random_angles(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(count);
    for (double &t : out)
        t = draw_angle(rng);
    return out;
}

} // namespace wfemu
