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

/**
 * @file
 * Cycle-level execution-time model of the gate unit.
 *
 * A gate sweeps all 2^n amplitudes, spending a fixed number of clock cycles
 * per amplitude that depends on the gate unit and the number format:
 *
 *     time = period * 2^n * sum over gates of cycles(gate)
 *
 * Host transfers and control overhead are not modeled.
 */

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "wfemu/gates.hpp"

namespace wfemu {

struct TimingProfile {
    NumberFormat format;
    double period_ns = 0.0;
    std::array<int, kOpcodeCount> cycles_per_gate{}; // indexed by Opcode

    int cycles(Opcode op) const { return cycles_per_gate[static_cast<std::size_t>(op)]; }
};

/// Built-in profiles for fp16/fp32/fx16/fx24/fx32. Throws
/// std::invalid_argument for the reference format, which has no hardware.
TimingProfile builtin_profile(const NumberFormat &fmt);

struct PowerProfile {
    double watts = 0.81;
};

struct CostReport {
    std::size_t gates = 0;
    int n = 0;
    std::uint64_t total_cycles = 0; // clock cycles, all gates and amplitudes
    double time_s = 0.0;
    double ngs = 0.0;   // time / (gates * 2^n); 0 when gates == 0
    bool ngs_defined = false;
    double pdp_joules = 0.0;
};

/// Throws std::invalid_argument if an opcode has no positive cycle count.
CostReport predict(const Program &program, const TimingProfile &profile,
                   const PowerProfile &power = {});

/// time / (m * 2^n). Throws std::invalid_argument when m == 0.
double ngs(const CostReport &report, std::size_t m, int n);

/// watts * time.
double pdp(const CostReport &report, const PowerProfile &power);

void write_cost_header(std::ostream &os); // task,n,format,gates,cycles,time_s,ngs,pdp_j
void write_cost_row(std::ostream &os, const std::string &task, const NumberFormat &fmt,
                    const CostReport &r);

} // namespace wfemu
