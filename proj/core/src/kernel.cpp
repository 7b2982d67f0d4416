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

#include "wfemu/kernel.hpp"

#include <string>
#include <utility>

namespace wfemu {

namespace {

template <class Arith>
inline void accumulate(const Arith &ar, Amplitude &acc, const Amplitude &coef,
                       const Amplitude &x) {
    double re, im;
    cmul(ar, coef.re, coef.im, x.re, x.im, re, im);
    acc.re = ar.add(acc.re, re);
    acc.im = ar.add(acc.im, im);
}

template <class Arith>
void single_impl(const Arith &ar, const GateMatrix &g, int n, int w0, const Amplitude *src,
                 Amplitude *dst) {
    const std::size_t count = std::size_t{1} << n;
    const std::size_t cut = std::size_t{1} << (n - w0 - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const Amplitude x = src[i];
        if ((i & cut) == 0) {
            accumulate(ar, dst[i], g.a, x);
            accumulate(ar, dst[i + cut], g.c, x);
        } else {
            accumulate(ar, dst[i], g.d, x);
            accumulate(ar, dst[i - cut], g.b, x);
        }
    }
}

void single_unchecked(const Instruction &ins, const StateVector &src, StateVector &dst) {
    const GateMatrix g = coeffs(ins);
    arith::visit(src.format(), [&](const auto &ar) {
        single_impl(ar, g, src.qubits(), ins.w0, src.amplitudes().data(),
                    dst.amplitudes().data());
    });
}

void cx_unchecked(const Instruction &ins, const StateVector &src, StateVector &dst) {
    const int n = src.qubits();
    const std::size_t count = src.size();
    const std::size_t control = std::size_t{1} << (n - ins.w0 - 1);
    const std::size_t cut = std::size_t{1} << (n - ins.w1 - 1);
    const Amplitude *in = src.amplitudes().data();
    Amplitude *out = dst.amplitudes().data();
    for (std::size_t i = 0; i < count; ++i) {
        if (i & control)
            out[(i & cut) ? i - cut : i + cut] = in[i];
        else
            out[i] = in[i];
    }
}

void check_buffers(const Instruction &ins, const StateVector &src, const StateVector &dst) {
    if (src.size() != dst.size() || !(src.format() == dst.format()))
        throw std::invalid_argument("source and destination buffers differ in size or format");
    if (ins.w0 >= src.qubits())
        throw std::invalid_argument("target qubit " + std::to_string(ins.w0) +
                                    " out of range");
    if (!dst.is_zero())
        throw std::invalid_argument("destination buffer is not cleared");
}

void apply_unchecked(const Instruction &ins, const StateVector &src, StateVector &dst) {
    if (ins.opcode == Opcode::CX)
        cx_unchecked(ins, src, dst);
    else
        single_unchecked(ins, src, dst);
}

} // namespace

void apply_single(const Instruction &ins, const StateVector &src, StateVector &dst) {
    if (ins.opcode == Opcode::CX)
        throw std::invalid_argument("apply_single called with CX");
    check_buffers(ins, src, dst);
    single_unchecked(ins, src, dst);
}

void apply_cx(const Instruction &ins, const StateVector &src, StateVector &dst) {
    if (ins.opcode != Opcode::CX)
        throw std::invalid_argument("apply_cx called with a single-qubit opcode");
    check_buffers(ins, src, dst);
    if (ins.w1 >= src.qubits() || ins.w0 == ins.w1)
        throw std::invalid_argument("CX control and target must be distinct and in range");
    cx_unchecked(ins, src, dst);
}

void apply(const Instruction &ins, const StateVector &src, StateVector &dst) {
    if (ins.opcode == Opcode::CX)
        apply_cx(ins, src, dst);
    else
        apply_single(ins, src, dst);
}

Session::Session(Program program, InitOptions opts)
    : program_(std::move(program)),
      buffers_(init(program_.qubits(), program_.format(), opts)) {}

Session::Session(Program program, const StateVector &initial)
    : program_(std::move(program)), buffers_(program_.qubits(), program_.format()) {
    if (initial.qubits() != program_.qubits() || !(initial.format() == program_.format()))
        throw std::invalid_argument("initial state does not match the program");
    buffers_.current() = initial;
}

bool Session::step() {
    if (done())
        return false;
    apply_unchecked(program_[pc_], buffers_.current(), buffers_.next());
    buffers_.advance();
    ++pc_;
    return !done();
}

const StateVector &Session::run() {
    while (step()) {
    }
    return buffers_.current();
}

StateVector run(const Program &program, InitOptions opts) {
    Session s(program, opts);
    return s.run();
}

StateVector run(const Circuit &circuit, const NumberFormat &fmt, InitOptions opts) {
    return run(lower(circuit, fmt), opts);
}

} // namespace wfemu
