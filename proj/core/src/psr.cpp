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

#include "wfemu/psr.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "wfemu/circuits.hpp"
#include "wfemu/kernel.hpp"

namespace wfemu {

double cost(const StateVector &s) {
    double acc = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const Amplitude &a = s[j];
        acc += static_cast<double>(j) * (a.re * a.re + a.im * a.im);
    }
    return acc;
}

CostEvaluator::CostEvaluator(int n, NumberFormat fmt, InitOptions opts)
    : n_(n), format_(fmt), opts_(opts) {}

double CostEvaluator::operator()(std::span<const double> thetas) {
    const Program p = lower(build_zxz(n_, thetas), format_);
    ++sessions_;
    return cost(run(p, opts_));
}

double grad_psr(CostEvaluator &eval, std::span<const double> thetas, std::size_t j,
                double kappa) {
    if (j >= thetas.size())
        throw std::invalid_argument("parameter index " + std::to_string(j) + " out of range");
    std::vector<double> shifted(thetas.begin(), thetas.end());
    shifted[j] = thetas[j] + std::numbers::pi / 2;
    const double plus = eval(shifted);
    shifted[j] = thetas[j] - std::numbers::pi / 2;
    const double minus = eval(shifted);
    return kappa * (plus - minus);
}

double grad_psr(int n, std::span<const double> thetas, std::size_t j, const NumberFormat &fmt,
                double kappa) {
    CostEvaluator eval(n, fmt);
    return grad_psr(eval, thetas, j, kappa);
}

std::vector<double> gradient(CostEvaluator &eval, std::span<const double> thetas,
                             double kappa) {
    std::vector<double> g(thetas.size());
    for (std::size_t j = 0; j < thetas.size(); ++j)
        g[j] = grad_psr(eval, thetas, j, kappa);
    return g;
}

Optimizer optimize(int n, std::vector<double> theta0, const NumberFormat &fmt,
                   const OptimizeOptions &opts) {
    if (opts.gamma < 0.0)
        throw std::invalid_argument("learning rate must be non-negative");
    if (theta0.size() != 3 * static_cast<std::size_t>(n))
        throw std::invalid_argument("ZXZ ansatz needs " + std::to_string(3 * n) + " parameters");
    CostEvaluator eval(n, fmt, opts.init);
    Optimizer opt;
    opt.thetas = std::move(theta0);
    opt.gamma = opts.gamma;
    opt.iterations = opts.iterations;
    opt.history.reserve(static_cast<std::size_t>(std::max(opts.iterations, 0)));
    for (int it = 1; it <= opts.iterations; ++it) {
        const std::vector<double> g = gradient(eval, opt.thetas, opts.kappa);
        for (std::size_t j = 0; j < g.size(); ++j)
            opt.thetas[j] -= opts.gamma * g[j];
        opt.history.push_back({it, eval(opt.thetas), opt.thetas});
    }
    opt.sessions = eval.sessions();
    return opt;
}

void write_trace_csv(std::ostream &os, const Optimizer &opt) {
    os << "iter,cost";
    for (std::size_t j = 0; j < opt.thetas.size(); ++j)
        os << ",theta_" << j;
    os << '\n';
    char buf[40];
    for (const HistoryEntry &h : opt.history) {
        std::snprintf(buf, sizeof buf, "%d,%.17g", h.iteration, h.cost);
        os << buf;
        for (double t : h.thetas) {
            std::snprintf(buf, sizeof buf, ",%.17g", t);
            os << buf;
        }
        os << '\n';
    }
}

} // namespace wfemu
