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
 * Software emulation of the accelerator number formats.
 *
 * Every emulated value is carried in a host `double` that holds the exact
 * value of a representable number of its format. Fixed-point values are
 * raw / 2^fraction_bits, floating-point values are binary16/binary32
 * numbers; both embed exactly in binary64. The arithmetic policies below
 * take such carriers, compute the exact real result, and round it once.
 */

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace wfemu {

enum class FormatKind { FloatingPoint, FixedPoint, Reference };

/// FX: truncation drops the low bits (floor). FP: truncation rounds toward 0.
enum class Rounding { NearestEven, Truncate };

struct NumberFormat {
    FormatKind kind = FormatKind::Reference;
    int total_bits = 64;
    int fraction_bits = 0; // fixed-point only
    int exponent_bits = 11; // floating-point and reference
    int mantissa_bits = 52;
    Rounding rounding = Rounding::NearestEven;

    static constexpr NumberFormat fp16() { return {FormatKind::FloatingPoint, 16, 0, 5, 10}; }
    static constexpr NumberFormat fp32() { return {FormatKind::FloatingPoint, 32, 0, 8, 23}; }
    static constexpr NumberFormat fx16() { return {FormatKind::FixedPoint, 16, 14, 0, 0}; }
    static constexpr NumberFormat fx24() { return {FormatKind::FixedPoint, 24, 22, 0, 0}; }
    static constexpr NumberFormat fx32() { return {FormatKind::FixedPoint, 32, 30, 0, 0}; }
    static constexpr NumberFormat reference() { return {}; }

    constexpr NumberFormat with_rounding(Rounding r) const {
        NumberFormat f = *this;
        f.rounding = r;
        return f;
    }

    constexpr bool is_fixed() const { return kind == FormatKind::FixedPoint; }
    constexpr bool is_float() const { return kind == FormatKind::FloatingPoint; }
    constexpr bool is_reference() const { return kind == FormatKind::Reference; }

    /// Spacing of adjacent fixed-point values, 2^-fraction_bits.
    double step() const;

    /// Lower-case short name: fp16, fp32, fx16, fx24, fx32, ref.
    std::string name() const;

    friend constexpr bool operator==(const NumberFormat &, const NumberFormat &) = default;
};

/// Parses fp16/fp32/fx16/fx24/fx32/ref (case-insensitive; "reference" and
/// "fp64" are accepted for ref). Throws std::invalid_argument otherwise.
NumberFormat parse_format(std::string_view text);

/// The six formats in the order used by reports.
inline constexpr NumberFormat kAllFormats[] = {
    NumberFormat::fp16(), NumberFormat::fp32(), NumberFormat::fx16(),
    NumberFormat::fx24(), NumberFormat::fx32(), NumberFormat::reference()};

namespace arith {

/// Two's-complement fixed point with 1 sign bit, 1 integer bit and
/// `fraction_bits` fraction bits. Overflow saturates.
class Fixed {
  public:
    explicit Fixed(const NumberFormat &fmt);

    double quantize(double x) const;

    double mul(double a, double b) const {
        const std::int64_t p = raw(a) * raw(b);
        return value(saturate(shift_round(p, frac_)));
    }
    double add(double a, double b) const { return value(saturate(raw(a) + raw(b))); }
    double sub(double a, double b) const { return value(saturate(raw(a) - raw(b))); }

    std::int64_t raw(double v) const { return static_cast<std::int64_t>(v * scale_); }
    double value(std::int64_t r) const { return static_cast<double>(r) * inv_scale_; }
    std::int64_t raw_min() const { return lo_; }
    std::int64_t raw_max() const { return hi_; }

  private:
    std::int64_t saturate(std::int64_t r) const { return r < lo_ ? lo_ : (r > hi_ ? hi_ : r); }

    std::int64_t shift_round(std::int64_t p, int s) const {
        const std::int64_t q = p >> s; // arithmetic shift: floor
        if (truncate_)
            return q;
        const std::int64_t rem = p - (q << s);
        const std::int64_t half = std::int64_t{1} << (s - 1);
        if (rem > half || (rem == half && (q & 1)))
            return q + 1;
        return q;
    }

    int frac_;
    double scale_;
    double inv_scale_;
    std::int64_t lo_;
    std::int64_t hi_;
    bool truncate_;
};

/// IEEE-754 binary floating point with `mantissa_bits` stored bits and
/// `exponent_bits` exponent bits, including subnormals and infinities.
class Float {
  public:
    explicit Float(const NumberFormat &fmt);

    double quantize(double x) const { return round(x, 0.0); }

    // Products of two binary32 values are exact in binary64.
    double mul(double a, double b) const { return round(a * b, 0.0); }

    double add(double a, double b) const {
        const double s = a + b;
        const double bb = s - a;
        const double err = (a - (s - bb)) + (b - bb);
        return round(s, err);
    }
    double sub(double a, double b) const { return add(a, -b); }

    /// Rounds the exact value s + err (|err| <= half an ulp of s in binary64)
    /// to this format.
    double round(double s, double err) const;

    double max_finite() const { return max_finite_; }

  private:
    int precision_; // significand bits including the hidden bit
    int emin_;
    double max_finite_;
    bool truncate_;
};

/// Host binary64; the oracle format.
class Reference {
  public:
    explicit Reference(const NumberFormat &) {}
    Reference() = default;
    double quantize(double x) const { return x; }
    double mul(double a, double b) const { return a * b; }
    double add(double a, double b) const { return a + b; }
    double sub(double a, double b) const { return a - b; }
};

/// Calls f with the concrete arithmetic policy for fmt.
template <class F>
decltype(auto) visit(const NumberFormat &fmt, F &&f) {
    switch (fmt.kind) {
    case FormatKind::FixedPoint:
        return std::forward<F>(f)(Fixed(fmt));
    case FormatKind::FloatingPoint:
        return std::forward<F>(f)(Float(fmt));
    case FormatKind::Reference:
        break;
    }
    return std::forward<F>(f)(Reference(fmt));
}

} // namespace arith

/// A value of one format, identified by its raw bit pattern. Equality is
/// bit equality plus format equality.
class Scalar {
  public:
    Scalar() = default;
    Scalar(NumberFormat fmt, std::uint64_t bits);

    /// v must already be representable in fmt (e.g. a policy result).
    static Scalar from_value(double v, const NumberFormat &fmt);

    const NumberFormat &format() const { return format_; }
    std::uint64_t bits() const { return bits_; }
    double value() const;

    friend bool operator==(const Scalar &, const Scalar &) = default;

  private:
    NumberFormat format_;
    std::uint64_t bits_ = 0;
};

struct ComplexScalar {
    Scalar re;
    Scalar im;
    friend bool operator==(const ComplexScalar &, const ComplexScalar &) = default;
};

/// Nearest representable value (or truncation, per fmt.rounding). Fixed-point
/// inputs outside [-2, 2) saturate; NaN into a fixed-point format throws
/// std::domain_error.
Scalar quantize(double x, const NumberFormat &fmt);

/// Throws std::invalid_argument on format mismatch.
Scalar mul(const Scalar &a, const Scalar &b);
Scalar add(const Scalar &a, const Scalar &b);
Scalar sub(const Scalar &a, const Scalar &b);

/// (a+bi)(c+di) as ac, bd, ad, bc then ac-bd, ad+bc, each rounded.
ComplexScalar cmul(const ComplexScalar &x, const ComplexScalar &y);

/// Same decomposition on carrier doubles, used by the kernel.
template <class Arith>
inline void cmul(const Arith &ar, double xr, double xi, double yr, double yi, double &out_re,
                 double &out_im) {
    const double ac = ar.mul(xr, yr);
    const double bd = ar.mul(xi, yi);
    const double ad = ar.mul(xr, yi);
    const double bc = ar.mul(xi, yr);
    out_re = ar.sub(ac, bd);
    out_im = ar.add(ad, bc);
}

} // namespace wfemu
