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

#include "wfemu/gates.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

namespace wfemu {

namespace {

constexpr std::uint8_t kImageMagic[4] = {'W', 'F', 'C', 'X'};
constexpr std::uint8_t kImageVersion = 1;
constexpr std::size_t kImageHeader = 8;

Instruction make(Opcode op, int w0, int w1, double sin_half, double cos_half,
                 const NumberFormat &fmt) {
    return {op, static_cast<std::uint8_t>(w0), static_cast<std::uint8_t>(w1),
            quantize(sin_half, fmt), quantize(cos_half, fmt)};
}

Instruction rotation(Opcode op, int q, double theta, const NumberFormat &fmt) {
    return make(op, q, 0, std::sin(theta / 2), std::cos(theta / 2), fmt);
}

// Half-angle pi/2 values, exact rather than sin/cos of M_PI/2.
Instruction half_turn(Opcode op, int q, const NumberFormat &fmt) {
    return make(op, q, 0, 1.0, 0.0, fmt);
}

void put_f64(std::uint8_t *out, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i)
        out[i] = static_cast<std::uint8_t>(bits >> (8 * i));
}

double get_f64(const std::uint8_t *in) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(in[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

} // namespace

std::string_view gate_name(GateKind k) {
    switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::CX: return "CX";
    case GateKind::Rx: return "RX";
    case GateKind::Ry: return "RY";
    case GateKind::Rz: return "RZ";
    case GateKind::T: return "T";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    }
    return "?";
}

bool is_rotation(GateKind k) { return k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz; }

void validate(const GateSpec &g, int n) {
    if (g.target < 0 || g.target >= n)
        throw std::invalid_argument("qubit " + std::to_string(g.target) + " out of range for " +
                                    std::to_string(n) + " qubits");
    if (g.kind == GateKind::CX) {
        if (g.control < 0 || g.control >= n)
            throw std::invalid_argument("control qubit " + std::to_string(g.control) +
                                        " out of range for " + std::to_string(n) + " qubits");
        if (g.control == g.target)
            throw std::invalid_argument("control equals target");
    }
}

Program::Program(int n, NumberFormat fmt) : n_(n), format_(fmt) {
    if (n < 1 || n > 31)
        throw std::invalid_argument("program qubit count must be in [1, 31]");
}

void Program::push(const Instruction &ins) {
    if (instrs_.size() >= kContextDepth)
        throw CapacityError("context memory overflow: more than " +
                            std::to_string(kContextDepth) + " instructions");
    if (ins.w0 >= n_ || (ins.opcode == Opcode::CX && (ins.w1 >= n_ || ins.w1 == ins.w0)))
        throw std::invalid_argument("instruction qubit fields invalid for " +
                                    std::to_string(n_) + " qubits");
    if (!(ins.sin_half.format() == format_) || !(ins.cos_half.format() == format_))
        throw std::invalid_argument("instruction format differs from program format");
    instrs_.push_back(ins);
}

std::vector<Instruction> lower(const GateSpec &g, const NumberFormat &fmt) {
    const int q = g.target;
    switch (g.kind) {
    case GateKind::H: {
        const double h = std::numbers::sqrt2 / 2;
        return {make(Opcode::H, q, 0, h, h, fmt)};
    }
    case GateKind::S:
        return {make(Opcode::S, q, 0, 0.0, 0.0, fmt)};
    case GateKind::CX:
        return {make(Opcode::CX, g.control, g.target, 0.0, 0.0, fmt)};
    case GateKind::Rx:
        return {rotation(Opcode::Rx, q, g.theta, fmt)};
    case GateKind::Ry:
        return {rotation(Opcode::Ry, q, g.theta, fmt)};
    case GateKind::Rz:
        return {rotation(Opcode::Rz, q, g.theta, fmt)};
    case GateKind::T:
        return {rotation(Opcode::Rz, q, std::numbers::pi / 4, fmt)};
    case GateKind::X:
        return {half_turn(Opcode::Rx, q, fmt)};
    case GateKind::Y:
        return {half_turn(Opcode::Ry, q, fmt)};
    case GateKind::Z:
        return {half_turn(Opcode::Rz, q, fmt)};
    }
    throw std::invalid_argument("unknown gate kind");
}

Program lower(const Circuit &c, const NumberFormat &fmt) {
    Program p(c.n, fmt);
    for (const GateSpec &g : c.gates) {
        validate(g, c.n);
        for (const Instruction &ins : lower(g, fmt))
            p.push(ins);
    }
    return p;
}

GateMatrix coeffs(const Instruction &ins) {
    const double s = ins.sin_half.value();
    const double c = ins.cos_half.value();
    switch (ins.opcode) {
    case Opcode::H: {
        const double h = ins.cos_half.value();
        return {{h, 0}, {h, 0}, {h, 0}, {-h, 0}};
    }
    case Opcode::S:
        return {{1, 0}, {0, 0}, {0, 0}, {0, 1}};
    case Opcode::Rx:
        return {{c, 0}, {0, -s}, {0, -s}, {c, 0}};
    case Opcode::Ry:
        return {{c, 0}, {-s, 0}, {s, 0}, {c, 0}};
    case Opcode::Rz:
        return {{c, -s}, {0, 0}, {0, 0}, {c, s}};
    case Opcode::CX:
        break;
    }
    throw std::invalid_argument("coeffs: CX has no 2x2 matrix");
}

Record encode(const Instruction &ins) {
    Record r{};
    r[0] = static_cast<std::uint8_t>(ins.opcode);
    r[1] = ins.w0;
    r[2] = ins.w1;
    r[3] = 0;
    put_f64(r.data() + 4, ins.sin_half.value());
    put_f64(r.data() + 12, ins.cos_half.value());
    return r;
}

Instruction decode(std::span<const std::uint8_t> bytes, const NumberFormat &fmt) {
    if (bytes.size() < kRecordSize)
        throw std::invalid_argument("truncated instruction record (" +
                                    std::to_string(bytes.size()) + " bytes)");
    if (bytes[0] >= kOpcodeCount)
        throw std::invalid_argument("invalid opcode " + std::to_string(bytes[0]));
    if (bytes[1] >= 32 || bytes[2] >= 32)
        throw std::invalid_argument("qubit field exceeds 5 bits");
    return {static_cast<Opcode>(bytes[0]), bytes[1], bytes[2],
            quantize(get_f64(bytes.data() + 4), fmt), quantize(get_f64(bytes.data() + 12), fmt)};
}

bool looks_like_program_image(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= kImageHeader && std::memcmp(bytes.data(), kImageMagic, 4) == 0;
}

std::vector<std::uint8_t> encode_program(const Program &p) {
    std::vector<std::uint8_t> out(kImageHeader + p.size() * kRecordSize);
    std::memcpy(out.data(), kImageMagic, 4);
    out[4] = kImageVersion;
    out[5] = static_cast<std::uint8_t>(p.qubits());
    std::size_t off = kImageHeader;
    for (const Instruction &ins : p.instructions()) {
        const Record r = encode(ins);
        std::memcpy(out.data() + off, r.data(), kRecordSize);
        off += kRecordSize;
    }
    return out;
}

Program decode_program(std::span<const std::uint8_t> bytes, const NumberFormat &fmt) {
    if (!looks_like_program_image(bytes))
        throw std::invalid_argument("not a program image (bad magic)");
    if (bytes[4] != kImageVersion)
        throw std::invalid_argument("unsupported program image version " +
                                    std::to_string(bytes[4]));
    const auto body = bytes.subspan(kImageHeader);
    if (body.size() % kRecordSize != 0)
        throw std::invalid_argument("truncated instruction record at end of program image");
    Program p(bytes[5], fmt);
    for (std::size_t off = 0; off < body.size(); off += kRecordSize)
        p.push(decode(body.subspan(off, kRecordSize), fmt));
    return p;
}

} // namespace wfemu
