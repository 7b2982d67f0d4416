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

#include <iosfwd>
#include <string>

#include "wfemu/qstate.hpp"

namespace wfemu {

/// |<a|b>|^2 accumulated in binary64. Throws std::invalid_argument on a
/// length mismatch.
double fidelity(const StateVector &a, const StateVector &b);

/// (1/2^n) * sum_j |a_j - b_j|^2 in binary64.
double mse(const StateVector &a, const StateVector &b);

struct AccuracyReport {
    std::string task;
    int n = 0;
    NumberFormat format;
    double fidelity = 0.0;
    double mse = 0.0;
};

/// Compares a run against the binary64 run of the same program.
AccuracyReport evaluate(std::string task, const StateVector &computed,
                        const StateVector &reference);

void write_accuracy_header(std::ostream &os); // task,n,format,fidelity,mse
void write_accuracy_row(std::ostream &os, const AccuracyReport &r);

} // namespace wfemu
