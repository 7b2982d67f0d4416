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
 * Gate set, lowering to context-memory instructions, and the binary
 * instruction record.
 *
 * Basic gates {H, S, CX, Rx, Ry, Rz} map to one instruction each. T, X, Y
 * and Z lower to Rz(pi/4), Rx(pi), Ry(pi) and Rz(pi); these agree with the
 * textbook matrices up to a global phase.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "wfemu/numerics.hpp"
#include "wfemu/qstate.hpp"

namespace wfemu {

enum class GateKind { H, S, CX, Rx, Ry, Rz, T, X, Y, Z };

std::string_view gate_name(GateKind k); // "H", "CX", "RX", ...
bool is_rotation(GateKind k);

/// One gate of a circuit. `control` is meaningful for CX only and `theta`
/// for rotations only.
struct GateSpec {
    GateKind kind = GateKind::H;
    int target = 0;
    int control = -1;
    double theta = 0.0;

    static GateSpec h(int q) { return {GateKind::H, q}; }
    static GateSpec s(int q) { return {GateKind::S, q}; }
    static GateSpec cx(int control, int target) { return {GateKind::CX, target, control}; }
    static GateSpec rx(int q, double t) { return {GateKind::Rx, q, -1, t}; }
    static GateSpec ry(int q, double t) { return {GateKind::Ry, q, -1, t}; }
    static GateSpec rz(int q, double t) { return {GateKind::Rz, q, -1, t}; }

    friend bool operator==(const GateSpec &, const GateSpec &) = default;
};

/// Throws std::invalid_argument if qubit indices fall outside [0, n) or a CX
/// has control == target.
void validate(const GateSpec &g, int n);

/// A format-independent gate list on n qubits.
struct Circuit {
    int n = 1;
    std::vector<GateSpec> gates;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

/// 3-bit opcodes of the six hardware gate units.
enum class Opcode : std::uint8_t { H = 0, S = 1, CX = 2, Rx = 3, Ry = 4, Rz = 5 };
inline constexpr int kOpcodeCount = 6;

/// One context-memory word. For CX, w0 is the control and w1 the target;
/// for single-qubit gates w0 is the target and w1 is 0.
struct Instruction {
    Opcode opcode = Opcode::H;
    std::uint8_t w0 = 0;
    std::uint8_t w1 = 0;
    Scalar sin_half; // sin(theta/2); 1/sqrt(2) for H; 0 for S and CX
    Scalar cos_half; // cos(theta/2); 1/sqrt(2) for H; 0 for S and CX

    friend bool operator==(const Instruction &, const Instruction &) = default;
};

inline constexpr std::size_t kContextDepth = 2048;

/// Instructions for one session, quantized for `format`. Never holds more
/// than kContextDepth instructions.
class Program {
  public:
    Program(int n, NumberFormat fmt);

    int qubits() const { return n_; }
    const NumberFormat &format() const { return format_; }
    std::size_t size() const { return instrs_.size(); }
    bool empty() const { return instrs_.empty(); }
    std::span<const Instruction> instructions() const { return instrs_; }
    const Instruction &operator[](std::size_t i) const { return instrs_[i]; }

    /// Throws CapacityError("context memory overflow") past kContextDepth and
    /// std::invalid_argument on out-of-range qubits or format mismatch.
    void push(const Instruction &ins);

    friend bool operator==(const Program &, const Program &) = default;

  private:
    int n_;
    NumberFormat format_;
    std::vector<Instruction> instrs_;
};

/// Sin/cos of theta/2 are computed in binary64 and then quantized to fmt.
std::vector<Instruction> lower(const GateSpec &g, const NumberFormat &fmt);

/// Lowers every gate; throws CapacityError if the result exceeds the
/// context depth.
Program lower(const Circuit &c, const NumberFormat &fmt);

/// Gate matrix (a b; c d) with entries in the instruction's format.
struct GateMatrix {
    Amplitude a, b, c, d;
};

/// Throws std::invalid_argument for CX.
GateMatrix coeffs(const Instruction &ins);

inline constexpr std::size_t kRecordSize = 20;
using Record = std::array<std::uint8_t, kRecordSize>;

/// Little-endian: u8 opcode, u8 w0, u8 w1, u8 0, f64 sin_half, f64 cos_half.
Record encode(const Instruction &ins);

/// Re-quantizes the stored binary64 values into fmt. Throws
/// std::invalid_argument on a short buffer, an opcode > 5, or w0/w1 >= 32.
Instruction decode(std::span<const std::uint8_t> bytes, const NumberFormat &fmt);

/// Program image: "WFCX", u8 version (1), u8 n, u16 0, then one record per
/// instruction.
std::vector<std::uint8_t> encode_program(const Program &p);
Program decode_program(std::span<const std::uint8_t> bytes, const NumberFormat &fmt);
bool looks_like_program_image(std::span<const std::uint8_t> bytes);

} // namespace wfemu
