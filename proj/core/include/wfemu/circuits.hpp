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

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wfemu/gates.hpp"

namespace wfemu {

enum class Task { QFT, RQC, ZXZ };

std::string_view task_name(Task t); // "qft", "rqc", "psr"

struct CircuitRecipe {
    Task task = Task::QFT;
    int n = 1;
    int depth = 1;           // RQC
    std::uint64_t seed = 0;  // RQC
    std::vector<double> thetas; // ZXZ, length 3n
};

/// Quantum Fourier transform over basic gates: H on each qubit, every
/// controlled phase CP(theta) as Rz(theta/2) on control, Rz(theta/2) on
/// target, CX, Rz(-theta/2) on target, CX, and the final qubit reversal as
/// three CX per swap. Gate totals: n H, n(n-1) + 3*floor(n/2) CX and
/// 3n(n-1)/2 Rz. Throws CapacityError past 2048 gates.
Circuit build_qft(int n);

/// n*depth gates drawn uniformly from {H, S, CX, Rx, Ry, Rz} (CX excluded
/// when n == 1) with a std::mt19937_64 seeded by `seed`. Each gate consumes
/// draws in this order: kind, target, then for CX the control from the
/// remaining qubits, for rotations the angle in [0, 2pi). Integer draws use
/// rejection sampling and the angle uses the top 53 bits, so the stream is
/// identical on every platform.
Circuit build_rqc(int n, int depth, std::uint64_t seed);

/// Per qubit q: Rz(t[3q]), Rx(t[3q+1]), Rz(t[3q+2]).
Circuit build_zxz(int n, std::span<const double> thetas);

Circuit build(const CircuitRecipe &r);

/// `count` angles uniform in [0, 2pi) from the same generator and mapping as
/// build_rqc.
std::vector<double> random_angles(std::size_t count, std::uint64_t seed);

} // namespace wfemu
