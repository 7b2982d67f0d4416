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
 * Parameter-shift gradients and gradient descent on the ZXZ ansatz.
 *
 * The cost of a state is sum_j j*|a_j|^2. Every cost is one emulator session
 * in the chosen format; the shift difference and its scaling happen in
 * binary64 on the host.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <span>
#include <vector>

#include "wfemu/numerics.hpp"
#include "wfemu/qstate.hpp"

namespace wfemu {

/// 1/2 is the exact two-term shift constant for exp(-i theta P / 2)
/// rotations. The 1/sqrt(2) variant is kept for comparison runs only.
enum class ShiftConstant { Half, InvSqrt2 };

constexpr double shift_value(ShiftConstant k) {
    return k == ShiftConstant::Half ? 0.5 : std::numbers::sqrt2 / 2;
}

double cost(const StateVector &s);

/// Evaluates the ansatz cost, one session per call, and counts sessions.
class CostEvaluator {
  public:
    CostEvaluator(int n, NumberFormat fmt, InitOptions opts = {});

    double operator()(std::span<const double> thetas);

    int qubits() const { return n_; }
    std::size_t sessions() const { return sessions_; }

  private:
    int n_;
    NumberFormat format_;
    InitOptions opts_;
    std::size_t sessions_ = 0;
};

/// kappa * (C(theta + pi/2 e_j) - C(theta - pi/2 e_j)); two sessions.
double grad_psr(CostEvaluator &eval, std::span<const double> thetas, std::size_t j,
                double kappa = 0.5);
double grad_psr(int n, std::span<const double> thetas, std::size_t j, const NumberFormat &fmt,
                double kappa = 0.5);

/// All partial derivatives in parameter order; 2 * thetas.size() sessions.
std::vector<double> gradient(CostEvaluator &eval, std::span<const double> thetas,
                             double kappa = 0.5);

struct HistoryEntry {
    int iteration = 0; // 1-based
    double cost = 0.0; // cost at the updated parameters
    std::vector<double> thetas;
};

struct OptimizeOptions {
    double gamma = 0.1;
    int iterations = 100;
    double kappa = 0.5;
    InitOptions init;
};

struct Optimizer {
    std::vector<double> thetas;
    double gamma = 0.0;
    int iterations = 0;
    std::vector<HistoryEntry> history;
    std::size_t sessions = 0;
};

/// Plain gradient descent. Each iteration runs 2*(3n) shifted sessions plus
/// one session for the recorded cost. Throws std::invalid_argument for a
/// negative gamma or a parameter count other than 3n.
Optimizer optimize(int n, std::vector<double> theta0, const NumberFormat &fmt,
                   const OptimizeOptions &opts = {});

/// `iter,cost,theta_0,...,theta_{3n-1}` with header.
void write_trace_csv(std::ostream &os, const Optimizer &opt);

} // namespace wfemu
