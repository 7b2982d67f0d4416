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

#include "wfemu/qstate.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace wfemu {

namespace {
// Host memory guard for cap-lifted runs.
constexpr int kHardMaxQubits = 30;
} // namespace

int qubit_cap(const NumberFormat &fmt) { return fmt.total_bits == 16 ? 18 : 17; }

StateVector::StateVector(int n, NumberFormat fmt)
    : n_(n), format_(fmt), amps_(std::size_t{1} << n) {
    if (n < 1 || n > kHardMaxQubits)
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kHardMaxQubits) + "], got " +
                                    std::to_string(n));
}

StateVector StateVector::zero_state(int n, NumberFormat fmt) {
    StateVector s(n, fmt);
    s.amps_[0].re = 1.0; // 1 is exact in every format
    return s;
}

StateVector StateVector::from_values(NumberFormat fmt, std::span<const Amplitude> values) {
    const auto n = static_cast<int>(std::bit_width(values.size()) - 1);
    if (values.size() < 2 || (std::size_t{1} << n) != values.size())
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    StateVector s(n, fmt);
    arith::visit(fmt, [&](const auto &ar) {
        for (std::size_t j = 0; j < values.size(); ++j)
            s.amps_[j] = {ar.quantize(values[j].re), ar.quantize(values[j].im)};
    });
    return s;
}

ComplexScalar StateVector::scalar(std::size_t j) const {
    return {Scalar::from_value(amps_[j].re, format_), Scalar::from_value(amps_[j].im, format_)};
}

void StateVector::clear() { std::fill(amps_.begin(), amps_.end(), Amplitude{}); }

bool StateVector::is_zero() const {
    return std::all_of(amps_.begin(), amps_.end(),
                       [](const Amplitude &a) { return a.re == 0.0 && a.im == 0.0; });
}

double norm_sq(const StateVector &s) {
    double acc = 0.0;
    for (const Amplitude &a : s.amplitudes())
        acc += a.re * a.re + a.im * a.im;
    return acc;
}

PingPong::PingPong(int n, NumberFormat fmt) : ping_(n, fmt), pong_(n, fmt) {}

void PingPong::advance() {
    swap();
    next().clear();
}

PingPong init(int n, NumberFormat fmt, InitOptions opts) {
    if (n < 1)
        throw std::invalid_argument("qubit count must be >= 1");
    if (opts.enforce_qubit_cap && n > qubit_cap(fmt))
        throw CapacityError("qubit cap exceeded: " + std::to_string(n) + " > " +
                            std::to_string(qubit_cap(fmt)) + " for " + fmt.name());
    PingPong pp(n, fmt);
    pp.current()[0].re = 1.0;
    return pp;
}

void write_amplitudes_csv(std::ostream &os, const StateVector &s) {
    os << "index,re,im,prob\n";
    char line[128];
    for (std::size_t j = 0; j < s.size(); ++j) {
        const Amplitude &a = s[j];
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g\n", j, a.re, a.im,
                      a.re * a.re + a.im * a.im);
        os << line;
    }
}

} // namespace wfemu
