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

#include "wfemu/metrics.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace wfemu {

namespace {
void require_same_length(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size())
        throw std::invalid_argument("state vectors differ in length");
}
} // namespace

double fidelity(const StateVector &a, const StateVector &b) {
    require_same_length(a, b);
    // conj(a_j) * b_j
    double re = 0.0, im = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const Amplitude &x = a[j];
        const Amplitude &y = b[j];
        re += x.re * y.re + x.im * y.im;
        im += x.re * y.im - x.im * y.re;
    }
    return re * re + im * im;
}

double mse(const StateVector &a, const StateVector &b) {
    require_same_length(a, b);
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double dr = a[j].re - b[j].re;
        const double di = a[j].im - b[j].im;
        acc += dr * dr + di * di;
    }
    return acc / static_cast<double>(a.size());
}

AccuracyReport evaluate(std::string task, const StateVector &computed,
                        const StateVector &reference) {
    return {std::move(task), computed.qubits(), computed.format(), fidelity(computed, reference),
            mse(computed, reference)};
}

void write_accuracy_header(std::ostream &os) { os << "task,n,format,fidelity,mse\n"; }

void write_accuracy_row(std::ostream &os, const AccuracyReport &r) {
    char buf[96];
    std::snprintf(buf, sizeof buf, ",%d,%s,%.17g,%.17g\n", r.n, r.format.name().c_str(),
                  r.fidelity, r.mse);
    os << r.task << buf;
}

} // namespace wfemu
