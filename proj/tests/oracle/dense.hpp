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

// Brute-force full-unitary simulator used only as a test oracle. It builds
// the 2^n x 2^n operator of every gate by Kronecker products of textbook
// matrices and multiplies it into a dense state. Nothing here calls the
// library's kernel or gate-coefficient code.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wfemu/gates.hpp"
#include "wfemu/qstate.hpp"

namespace oracle {

using cd = std::complex<double>;

struct Matrix {
    std::size_t dim = 0;
    std::vector<cd> m;

    explicit Matrix(std::size_t d) : dim(d), m(d * d) {}
    cd &at(std::size_t r, std::size_t c) { return m[r * dim + c]; }
    const cd &at(std::size_t r, std::size_t c) const { return m[r * dim + c]; }

    static Matrix identity(std::size_t d) {
        Matrix I(d);
        for (std::size_t i = 0; i < d; ++i)
            I.at(i, i) = 1.0;
        return I;
    }
};

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.dim * b.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < b.dim; ++k)
                for (std::size_t l = 0; l < b.dim; ++l)
                    out.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
    return out;
}

inline Matrix mat2(cd a, cd b, cd c, cd d) {
    Matrix g(2);
    g.at(0, 0) = a;
    g.at(0, 1) = b;
    g.at(1, 0) = c;
    g.at(1, 1) = d;
    return g;
}

/// Textbook single-qubit matrices. T is the standard diag(1, e^{i pi/4}).
inline Matrix textbook(const wfemu::GateSpec &g) {
    using wfemu::GateKind;
    const double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
    const double h = 1.0 / std::sqrt(2.0);
    const cd i{0.0, 1.0};
    switch (g.kind) {
    case GateKind::H: return mat2(h, h, h, -h);
    case GateKind::S: return mat2(1.0, 0.0, 0.0, i);
    case GateKind::Rx: return mat2(c, -i * s, -i * s, c);
    case GateKind::Ry: return mat2(c, -s, s, c);
    case GateKind::Rz: return mat2(std::exp(-i * (g.theta / 2)), 0.0, 0.0, std::exp(i * (g.theta / 2)));
    case GateKind::T: return mat2(1.0, 0.0, 0.0, std::exp(i * (std::numbers::pi / 4)));
    case GateKind::X: return mat2(0.0, 1.0, 1.0, 0.0);
    case GateKind::Y: return mat2(0.0, -i, i, 0.0);
    case GateKind::Z: return mat2(1.0, 0.0, 0.0, -1.0);
    case GateKind::CX: break;
    }
    throw std::invalid_argument("no 2x2 matrix for CX");
}

/// Full operator with qubit 0 as the leftmost tensor factor (most
/// significant index bit).
inline Matrix full_operator(const wfemu::GateSpec &g, int n) {
    const std::size_t dim = std::size_t{1} << n;
    if (g.kind == wfemu::GateKind::CX) {
        Matrix U(dim);
        const std::size_t cbit = std::size_t{1} << (n - 1 - g.control);
        const std::size_t tbit = std::size_t{1} << (n - 1 - g.target);
        for (std::size_t col = 0; col < dim; ++col)
            U.at((col & cbit) ? (col ^ tbit) : col, col) = 1.0;
        return U;
    }
    Matrix U = Matrix::identity(1);
    for (int q = 0; q < n; ++q)
        U = kron(U, q == g.target ? textbook(g) : Matrix::identity(2));
    return U;
}

inline std::vector<cd> apply(const Matrix &U, const std::vector<cd> &v) {
    std::vector<cd> out(U.dim);
    for (std::size_t r = 0; r < U.dim; ++r) {
        cd acc = 0.0;
        for (std::size_t c = 0; c < U.dim; ++c)
            acc += U.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

inline std::vector<cd> basis(int n, std::size_t j = 0) {
    std::vector<cd> v(std::size_t{1} << n);
    v[j] = 1.0;
    return v;
}

inline std::vector<cd> simulate(const wfemu::Circuit &c, std::vector<cd> v) {
    for (const auto &g : c.gates)
        v = oracle::apply(full_operator(g, c.n), v);
    return v;
}

inline std::vector<cd> simulate(const wfemu::Circuit &c) { return simulate(c, basis(c.n)); }

inline std::vector<cd> to_complex(const wfemu::StateVector &s) {
    std::vector<cd> v(s.size());
    for (std::size_t j = 0; j < s.size(); ++j)
        v[j] = {s[j].re, s[j].im};
    return v;
}

inline double max_abs_diff(const std::vector<cd> &a, const std::vector<cd> &b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

/// Rotates b by the global phase that best aligns it with a, then compares.
inline double max_abs_diff_up_to_phase(const std::vector<cd> &a, const std::vector<cd> &b) {
    cd overlap = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        overlap += std::conj(b[j]) * a[j];
    const cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cd{1.0};
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
        m = std::max(m, std::abs(a[j] - phase * b[j]));
    return m;
}

/// Discrete Fourier transform of a basis state with the MSB-first index
/// convention the QFT builder uses (output bit order reversed by swaps).
inline std::vector<cd> dft_of_basis(int n, std::size_t x) {
    const std::size_t N = std::size_t{1} << n;
    std::vector<cd> v(N);
    const double norm = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::size_t k = 0; k < N; ++k) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>((x * k) % N) / N;
        v[k] = norm * std::exp(cd{0.0, ang});
    }
    return v;
}

} // namespace oracle
