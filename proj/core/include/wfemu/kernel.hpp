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
 * Gate transition functions and the program-counter session loop.
 *
 * A gate reads the source buffer and accumulates into a zeroed destination,
 * visiting source indices in ascending order. For a single-qubit gate on
 * qubit w the partner index is i +/- cut with cut = 2^(n-w-1), so qubit 0 is
 * the most significant bit of the amplitude index. Every multiply and add
 * is rounded in the session format, which makes results bit-reproducible.
 */

#pragma once

#include <cstddef>

#include "wfemu/gates.hpp"
#include "wfemu/qstate.hpp"

namespace wfemu {

/// dst must be all-zero and match src in size and format; the opcode must not
/// be CX. Throws std::invalid_argument on violation.
void apply_single(const Instruction &ins, const StateVector &src, StateVector &dst);

/// Controlled-NOT with control w0 and target w1; moves amplitudes without
/// arithmetic, so bit patterns are preserved in every format.
void apply_cx(const Instruction &ins, const StateVector &src, StateVector &dst);

/// Dispatches on the opcode.
void apply(const Instruction &ins, const StateVector &src, StateVector &dst);

/// One emulator session: a program, the ping/pong buffers and the PC.
class Session {
  public:
    explicit Session(Program program, InitOptions opts = {});

    /// Starts from an explicit state instead of |0...0>; its size and format
    /// must match the program.
    Session(Program program, const StateVector &initial);

    /// Executes the instruction at pc, then swaps buffers and clears the new
    /// destination. Returns false once done.
    bool step();

    /// Runs to completion and returns the state in the active buffer.
    const StateVector &run();

    std::size_t pc() const { return pc_; }
    bool done() const { return pc_ == program_.size(); }
    const Program &program() const { return program_; }
    const PingPong &buffers() const { return buffers_; }
    const StateVector &result() const { return buffers_.current(); }

  private:
    Program program_;
    PingPong buffers_;
    std::size_t pc_ = 0;
};

/// Convenience: one session from |0...0>.
StateVector run(const Program &program, InitOptions opts = {});
StateVector run(const Circuit &circuit, const NumberFormat &fmt, InitOptions opts = {});

} // namespace wfemu
