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

#include <random>
#include <sstream>

#include "wfemu/circuits.hpp"
#include "wfemu/kernel.hpp"
#include "wfemu/metrics.hpp"

using namespace wfemu;

namespace {

const NumberFormat kRef = NumberFormat::reference();

StateVector basis(int n, std::size_t j) {
    StateVector s(n, kRef);
    s[j] = {1, 0};
    return s;
}

StateVector rotate(const StateVector &s, double phi) {
    StateVector r = s;
    for (auto &a : r.amplitudes())
        a = {a.re * std::cos(phi) - a.im * std::sin(phi), a.re * std::sin(phi) + a.im * std::cos(phi)};
    return r;
}

} // namespace

TEST(Fidelity, Examples) {
    const StateVector s = run(build_rqc(5, 4, 1), kRef);
    EXPECT_NEAR(fidelity(s, s), 1.0, 1e-14);
    EXPECT_EQ(fidelity(basis(1, 0), basis(1, 1)), 0.0);
    EXPECT_THROW(fidelity(basis(1, 0), basis(2, 0)), std::invalid_argument);
}

TEST(Fidelity, Fx32Qft10) {
    const Circuit c = build_qft(10);
    const double f = fidelity(run(c, NumberFormat::fx32()), run(c, kRef));
    EXPECT_GE(f, 1 - 1e-6);
    EXPECT_LE(f, 1 + 1e-6);
}

TEST(Mse, Examples) {
    const StateVector s = run(build_rqc(4, 4, 2), kRef);
    EXPECT_EQ(mse(s, s), 0.0);
    EXPECT_EQ(mse(basis(1, 0), basis(1, 1)), 1.0);
    EXPECT_THROW(mse(basis(1, 0), basis(3, 0)), std::invalid_argument);
}

TEST(Mse, Fx16IsOrderTenToMinusSevenOnRqc) {
    // Order-of-magnitude check; the full sweep lives in the acceptance suite.
    const Circuit c = build_rqc(12, 10, 7);
    const double m = mse(run(c, NumberFormat::fx16()), run(c, kRef));
    EXPECT_GT(m, 1e-9);
    EXPECT_LT(m, 1e-6);
}

TEST(MetricsProperty, FidelitySymmetricBitwise) {
    for (const auto &f : kAllFormats) {
        const Circuit c = build_rqc(6, 5, 11);
        const StateVector a = run(c, f), b = run(c, kRef);
        EXPECT_EQ(fidelity(a, b), fidelity(b, a)) << f.name();
    }
}

TEST(MetricsProperty, FidelityPhaseInvariant) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> ang(0, 6.283185307179586);
    const StateVector a = run(build_rqc(6, 6, 3), kRef);
    const StateVector b = run(build_rqc(6, 6, 4), kRef);
    const double f = fidelity(a, b);
    for (int k = 0; k < 20; ++k) {
        EXPECT_NEAR(fidelity(rotate(a, ang(rng)), b), f, 1e-12);
        EXPECT_NEAR(fidelity(a, rotate(b, ang(rng))), f, 1e-12);
    }
}

TEST(MetricsProperty, FidelityBoundedForNormalizedStates) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const StateVector a = run(build_rqc(5, 6, seed), kRef);
        const StateVector b = run(build_rqc(5, 6, seed + 100), kRef);
        const double f = fidelity(a, b);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1 + 1e-9);
    }
}

TEST(MetricsProperty, MseZeroIffBitIdentical) {
    const StateVector a = run(build_rqc(5, 5, 9), NumberFormat::fp32());
    StateVector b = a;
    EXPECT_EQ(mse(a, b), 0.0);
    b[17].im = std::nextafter(b[17].im, 1.0);
    EXPECT_GT(mse(a, b), 0.0);
}

TEST(MetricsProperty, MseScalesWithPerturbation) {
    for (int n : {3, 6, 9}) {
        const StateVector a = run(build_rqc(n, 3, 5), kRef);
        for (double d : {1e-3, 1e-5, 1e-7}) {
            StateVector b = a;
            b[1].re += d;
            const double want = d * d / std::ldexp(1.0, n);
            EXPECT_NEAR(mse(a, b) / want, 1.0, 1e-6) << n << ' ' << d;
        }
    }
}

TEST(Evaluate, ReportAndCsv) {
    const Circuit c = build_qft(4);
    const AccuracyReport r = evaluate("qft", run(c, NumberFormat::fx24()), run(c, kRef));
    EXPECT_EQ(r.task, "qft");
    EXPECT_EQ(r.n, 4);
    EXPECT_EQ(r.format, NumberFormat::fx24());
    EXPECT_GE(r.mse, 0.0);
    std::ostringstream os;
    write_accuracy_header(os);
    write_accuracy_row(os, r);
    EXPECT_EQ(os.str().rfind("task,n,format,fidelity,mse\nqft,4,fx24,", 0), 0u) << os.str();
}
