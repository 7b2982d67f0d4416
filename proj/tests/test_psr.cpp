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

#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <sstream>

#include "wfemu/circuits.hpp"
#include "wfemu/kernel.hpp"
#include "wfemu/psr.hpp"

using namespace wfemu;

namespace {

constexpr double kPi = std::numbers::pi;
const NumberFormat kRef = NumberFormat::reference();

double central_difference(int n, std::vector<double> t, std::size_t j, double h) {
    CostEvaluator c(n, kRef);
    t[j] += h;
    const double up = c(t);
    t[j] -= 2 * h;
    const double dn = c(t);
    return (up - dn) / (2 * h);
}

} // namespace

TEST(Cost, Examples) {
    EXPECT_EQ(cost(StateVector::zero_state(3, kRef)), 0.0);
    StateVector top(3, kRef);
    top[7] = {1, 0};
    EXPECT_EQ(cost(top), 7.0);
    const std::vector<Amplitude> u(4, Amplitude{0.5, 0});
    EXPECT_EQ(cost(StateVector::from_values(kRef, u)), 1.5);
}

TEST(CostProperty, GlobalPhaseInvariant) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ang(0, 2 * kPi);
    const StateVector s = run(build_rqc(4, 5, 3), kRef);
    for (int k = 0; k < 20; ++k) {
        const double phi = ang(rng);
        StateVector r = s;
        for (auto &a : r.amplitudes())
            a = {a.re * std::cos(phi) - a.im * std::sin(phi), a.re * std::sin(phi) + a.im * std::cos(phi)};
        EXPECT_NEAR(cost(r), cost(s), 1e-12);
    }
}

TEST(Grad, RzOnBasisStateHasZeroGradient) {
    const std::vector<double> zero(6, 0.0);
    EXPECT_NEAR(grad_psr(2, zero, 0, kRef), 0.0, 1e-15);
    EXPECT_NEAR(grad_psr(2, zero, 3, kRef), 0.0, 1e-15);
}

TEST(Grad, OneQubitClosedForm) {
    // C = sin^2(t1/2), dC/dt1 = sin(t1)/2.
    EXPECT_NEAR(grad_psr(1, std::vector<double>{0, 0, 0}, 1, kRef), 0.0, 1e-15);
    EXPECT_NEAR(grad_psr(1, std::vector<double>{0, kPi / 2, 0}, 1, kRef), 0.5, 1e-15);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int k = 0; k < 50; ++k) {
        const std::vector<double> t = {ang(rng), ang(rng), ang(rng)};
        EXPECT_NEAR(grad_psr(1, t, 1, kRef), std::sin(t[1]) / 2, 1e-14);
        CostEvaluator c(1, kRef);
        EXPECT_NEAR(c(t), std::pow(std::sin(t[1] / 2), 2), 1e-15);
    }
}

TEST(GradProperty, MatchesFiniteDifferences) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> ang(0, 2 * kPi);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const int n = 1 + static_cast<int>(rng() % 4);
        std::vector<double> t(3 * static_cast<std::size_t>(n));
        for (auto &x : t)
            x = ang(rng);
        for (std::size_t j = 0; j < t.size(); ++j)
            worst = std::max(worst, std::fabs(grad_psr(n, t, j, kRef) -
                                              central_difference(n, t, j, 1e-5)));
    }
    EXPECT_LE(worst, 1e-6);
}

TEST(GradProperty, InvSqrt2ConstantScalesByRootTwo) {
    const std::vector<double> t = {0.3, 1.1, -0.4, 2.0, 0.7, 0.1};
    for (std::size_t j = 0; j < t.size(); ++j) {
        const double half = grad_psr(2, t, j, kRef, shift_value(ShiftConstant::Half));
        const double lit = grad_psr(2, t, j, kRef, shift_value(ShiftConstant::InvSqrt2));
        EXPECT_NEAR(lit, std::sqrt(2.0) * half, 1e-14);
    }
}

TEST(Grad, VectorMatchesComponentsAndCountsSessions) {
    const std::vector<double> t = random_angles(9, 5);
    CostEvaluator c(3, NumberFormat::fx24());
    const auto g = gradient(c, t);
    EXPECT_EQ(c.sessions(), 18u);
    for (std::size_t j = 0; j < t.size(); ++j)
        EXPECT_EQ(g[j], grad_psr(3, t, j, NumberFormat::fx24()));
    EXPECT_THROW(grad_psr(c, t, 9), std::invalid_argument);
}

TEST(Optimize, OneQubitConverges) {
    OptimizeOptions o;
    o.gamma = 0.1;
    o.iterations = 50;
    const Optimizer r = optimize(1, {0, kPi / 2, 0}, kRef, o);
    ASSERT_EQ(r.history.size(), 50u);
    EXPECT_LT(r.history.back().cost, 0.05);
    EXPECT_EQ(r.history.front().iteration, 1);
}

TEST(Optimize, ZeroRateKeepsParameters) {
    OptimizeOptions o;
    o.gamma = 0.0;
    o.iterations = 5;
    const std::vector<double> t0 = random_angles(6, 8);
    const Optimizer r = optimize(2, t0, NumberFormat::fx32(), o);
    EXPECT_EQ(r.thetas, t0);
    for (const auto &h : r.history)
        EXPECT_EQ(h.cost, r.history.front().cost);
}

TEST(Optimize, SessionBookkeeping) {
    OptimizeOptions o;
    o.iterations = 3;
    EXPECT_EQ(optimize(2, random_angles(6, 1), kRef, o).sessions, 39u);
    o.iterations = 7;
    EXPECT_EQ(optimize(3, random_angles(9, 1), NumberFormat::fp16(), o).sessions, 2u * 9 * 7 + 7);
}

TEST(Optimize, Errors) {
    OptimizeOptions o;
    o.gamma = -0.1;
    EXPECT_THROW(optimize(1, {0, 1, 0}, kRef, o), std::invalid_argument);
    EXPECT_THROW(optimize(2, {0, 1, 0}, kRef), std::invalid_argument);
}

TEST(OptimizeProperty, MonotoneForSmallRates) {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> start(0.05, kPi - 0.05);
    for (double gamma : {0.05, 0.1, 0.25, 0.5}) {
        for (int k = 0; k < 10; ++k) {
            OptimizeOptions o;
            o.gamma = gamma;
            o.iterations = 40;
            const Optimizer r = optimize(1, {0.3, start(rng), -0.2}, kRef, o);
            for (std::size_t i = 1; i < r.history.size(); ++i)
                ASSERT_LE(r.history[i].cost, r.history[i - 1].cost + 1e-15) << gamma;
        }
    }
}

TEST(OptimizeProperty, DeterministicTrace) {
    OptimizeOptions o;
    o.iterations = 4;
    std::ostringstream a, b;
    write_trace_csv(a, optimize(2, random_angles(6, 2), NumberFormat::fx16(), o));
    write_trace_csv(b, optimize(2, random_angles(6, 2), NumberFormat::fx16(), o));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_EQ(a.str().rfind("iter,cost,theta_0,theta_1,theta_2,theta_3,theta_4,theta_5\n", 0), 0u);
}
