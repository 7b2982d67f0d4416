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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfemu/numerics.hpp"

namespace wfemu {

/// Raised when a request exceeds the modeled on-chip memories (qubit cap,
/// context-memory depth).
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One amplitude as a pair of carrier values representable in the owning
/// vector's format.
struct Amplitude {
    double re = 0.0;
    double im = 0.0;
    friend bool operator==(const Amplitude &, const Amplitude &) = default;
};

/// Largest qubit count the amplitude memories hold: 18 for 16-bit formats,
/// 17 otherwise.
int qubit_cap(const NumberFormat &fmt);

/// 2^n amplitudes; index j holds the coefficient of basis state |j>, where
/// qubit 0 is the most significant bit of j.
class StateVector {
  public:
    StateVector() = default;
    StateVector(int n, NumberFormat fmt);

    /// |0...0> in fmt.
    static StateVector zero_state(int n, NumberFormat fmt);

    /// Quantizes arbitrary complex amplitudes into fmt (test and tooling helper).
    static StateVector from_values(NumberFormat fmt, std::span<const Amplitude> values);

    int qubits() const { return n_; }
    const NumberFormat &format() const { return format_; }
    std::size_t size() const { return amps_.size(); }

    Amplitude &operator[](std::size_t j) { return amps_[j]; }
    const Amplitude &operator[](std::size_t j) const { return amps_[j]; }
    std::span<Amplitude> amplitudes() { return amps_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    ComplexScalar scalar(std::size_t j) const;

    void clear();
    bool is_zero() const;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    int n_ = 0;
    NumberFormat format_;
    std::vector<Amplitude> amps_;
};

/// Sum of |a_j|^2 accumulated in binary64.
double norm_sq(const StateVector &s);

enum class Buffer { Ping, Pong };

/// The two amplitude memories. The active buffer holds the current state;
/// the other is the destination of the next gate and is kept all-zero.
class PingPong {
  public:
    PingPong(int n, NumberFormat fmt);

    Buffer active() const { return active_; }
    const StateVector &ping() const { return ping_; }
    const StateVector &pong() const { return pong_; }

    const StateVector &current() const { return active_ == Buffer::Ping ? ping_ : pong_; }
    StateVector &current() { return active_ == Buffer::Ping ? ping_ : pong_; }
    const StateVector &next() const { return active_ == Buffer::Ping ? pong_ : ping_; }
    StateVector &next() { return active_ == Buffer::Ping ? pong_ : ping_; }

    /// Makes the other buffer active without touching either's contents.
    void swap() { active_ = active_ == Buffer::Ping ? Buffer::Pong : Buffer::Ping; }

    /// Swaps, then zeroes the new destination (the hardware clear step).
    void advance();

  private:
    StateVector ping_;
    StateVector pong_;
    Buffer active_ = Buffer::Ping;
};

struct InitOptions {
    bool enforce_qubit_cap = true;
};

/// Ping = |0...0>, pong = 0, active = Ping. Throws std::invalid_argument for
/// n < 1 and CapacityError when n exceeds qubit_cap(fmt) under the cap.
PingPong init(int n, NumberFormat fmt, InitOptions opts = {});

/// Writes `index,re,im,prob` rows (with header) at 17 significant digits.
void write_amplitudes_csv(std::ostream &os, const StateVector &s);

} // namespace wfemu
