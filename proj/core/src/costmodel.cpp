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

#include "wfemu/costmodel.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace wfemu {

namespace {
//                                          H  S  CX Rx Ry Rz
constexpr std::array<int, kOpcodeCount> kFloatCycles = {6, 4, 4, 6, 6, 8};
constexpr std::array<int, kOpcodeCount> kFixedCycles = {4, 2, 2, 4, 4, 4};
} // namespace

TimingProfile builtin_profile(const NumberFormat &fmt) {
    if (fmt.is_float() && fmt.total_bits == 16)
        return {fmt, 6.66, kFloatCycles};
    if (fmt.is_float() && fmt.total_bits == 32)
        return {fmt, 7.35, kFloatCycles};
    if (fmt.is_fixed() && fmt.total_bits == 16)
        return {fmt, 7.35, kFixedCycles};
    if (fmt.is_fixed() && fmt.total_bits == 24)
        return {fmt, 8.00, kFixedCycles};
    if (fmt.is_fixed() && fmt.total_bits == 32)
        return {fmt, 9.35, kFixedCycles};
    throw std::invalid_argument("no timing profile for format " + fmt.name());
}

CostReport predict(const Program &program, const TimingProfile &profile,
                   const PowerProfile &power) {
    std::uint64_t per_amplitude = 0;
    for (const Instruction &ins : program.instructions()) {
        const int c = profile.cycles(ins.opcode);
        if (c <= 0)
            throw std::invalid_argument("timing profile has no cycle count for opcode " +
                                        std::to_string(static_cast<int>(ins.opcode)));
        per_amplitude += static_cast<std::uint64_t>(c);
    }
    CostReport r;
    r.gates = program.size();
    r.n = program.qubits();
    r.total_cycles = per_amplitude << program.qubits();
    r.time_s = static_cast<double>(r.total_cycles) * profile.period_ns * 1e-9;
    r.ngs_defined = r.gates > 0;
    r.ngs = r.ngs_defined ? ngs(r, r.gates, r.n) : 0.0;
    r.pdp_joules = pdp(r, power);
    return r;
}

double ngs(const CostReport &report, std::size_t m, int n) {
    if (m == 0)
        throw std::invalid_argument("normalized gate speed is undefined for an empty program");
    return report.time_s / (static_cast<double>(m) * std::ldexp(1.0, n));
}

double pdp(const CostReport &report, const PowerProfile &power) {
    if (!(power.watts > 0.0))
        throw std::invalid_argument("power must be positive");
    return power.watts * report.time_s;
}

void write_cost_header(std::ostream &os) { os << "task,n,format,gates,cycles,time_s,ngs,pdp_j\n"; }

void write_cost_row(std::ostream &os, const std::string &task, const NumberFormat &fmt,
                    const CostReport &r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, ",%d,%s,%zu,%llu,%.6e,%.6e,%.6e\n", r.n, fmt.name().c_str(),
                  r.gates, static_cast<unsigned long long>(r.total_cycles), r.time_s, r.ngs,
                  r.pdp_joules);
    os << task << buf;
}

} // namespace wfemu
