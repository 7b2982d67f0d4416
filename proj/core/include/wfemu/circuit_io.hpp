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
 * Text circuit files.
 *
 *     # comment
 *     qubits 3
 *     H 0
 *     CX 0 1        (control, target)
 *     RZ 2 0.785398163397448279
 *
 * Gate mnemonics are case-insensitive: H S CX RX RY RZ T X Y Z. Angles are
 * radians; quantization happens when the circuit is lowered for a format.
 */

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wfemu/gates.hpp"

namespace wfemu {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &what);
    int line() const { return line_; }

  private:
    int line_;
};

/// Throws ParseError (with the 1-based line) on malformed input and
/// CapacityError when the circuit exceeds the context depth.
Circuit parse_circuit(std::string_view text);
Circuit read_circuit_file(const std::string &path);

/// Canonical form: header, then one gate per line, angles at 17 digits.
std::string print_circuit(const Circuit &c);
void write_circuit_file(const std::string &path, const Circuit &c);

} // namespace wfemu
