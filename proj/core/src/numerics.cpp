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

#include "wfemu/numerics.hpp"

#include <algorithm>
#include <cctype>

namespace wfemu {

namespace {

// 2^e for e in the binary64 normal range.
double pow2(int e) { return std::bit_cast<double>(static_cast<std::uint64_t>(e + 1023) << 52); }

std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

std::uint64_t encode_ieee(double v, int exp_bits, int man_bits) {
    const std::uint64_t sign = std::signbit(v) ? std::uint64_t{1} << (exp_bits + man_bits) : 0;
    const std::uint64_t exp_all = low_mask(exp_bits);
    if (std::isnan(v))
        return sign | (exp_all << man_bits) | (std::uint64_t{1} << (man_bits - 1));
    if (std::isinf(v))
        return sign | (exp_all << man_bits);
    const double a = std::fabs(v);
    if (a == 0.0)
        return sign;
    const int bias = (1 << (exp_bits - 1)) - 1;
    const int emin = 1 - bias;
    const int e = std::ilogb(a);
    if (e < emin) {
        const auto mant = static_cast<std::uint64_t>(std::ldexp(a, man_bits - emin));
        return sign | mant;
    }
    const auto mant = static_cast<std::uint64_t>(std::ldexp(a, man_bits - e)) & low_mask(man_bits);
    return sign | (static_cast<std::uint64_t>(e + bias) << man_bits) | mant;
}

double decode_ieee(std::uint64_t bits, int exp_bits, int man_bits) {
    const bool neg = (bits >> (exp_bits + man_bits)) & 1;
    const std::uint64_t exp_field = (bits >> man_bits) & low_mask(exp_bits);
    const std::uint64_t mant = bits & low_mask(man_bits);
    const int bias = (1 << (exp_bits - 1)) - 1;
    double mag;
    if (exp_field == low_mask(exp_bits))
        mag = mant ? std::numeric_limits<double>::quiet_NaN()
                   : std::numeric_limits<double>::infinity();
    else if (exp_field == 0)
        mag = std::ldexp(static_cast<double>(mant), 1 - bias - man_bits);
    else
        mag = std::ldexp(static_cast<double>(mant | (std::uint64_t{1} << man_bits)),
                         static_cast<int>(exp_field) - bias - man_bits);
    return neg ? -mag : mag;
}

void require_same_format(const Scalar &a, const Scalar &b) {
    if (!(a.format() == b.format()))
        throw std::invalid_argument("scalar format mismatch: " + a.format().name() + " vs " +
                                    b.format().name());
}

} // namespace

double NumberFormat::step() const {
    if (is_fixed())
        return std::ldexp(1.0, -fraction_bits);
    return std::ldexp(1.0, -mantissa_bits);
}

std::string NumberFormat::name() const {
    switch (kind) {
    case FormatKind::FixedPoint:
        return "fx" + std::to_string(total_bits);
    case FormatKind::FloatingPoint:
        return "fp" + std::to_string(total_bits);
    case FormatKind::Reference:
        break;
    }
    return "ref";
}

NumberFormat parse_format(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "fp16")
        return NumberFormat::fp16();
    if (s == "fp32")
        return NumberFormat::fp32();
    if (s == "fx16")
        return NumberFormat::fx16();
    if (s == "fx24")
        return NumberFormat::fx24();
    if (s == "fx32")
        return NumberFormat::fx32();
    if (s == "ref" || s == "reference" || s == "fp64")
        return NumberFormat::reference();
    throw std::invalid_argument("unknown number format '" + std::string(text) + "'");
}

namespace arith {

Fixed::Fixed(const NumberFormat &fmt)
    : frac_(fmt.fraction_bits), scale_(std::ldexp(1.0, fmt.fraction_bits)),
      inv_scale_(std::ldexp(1.0, -fmt.fraction_bits)),
      lo_(-(std::int64_t{1} << (fmt.total_bits - 1))),
      hi_((std::int64_t{1} << (fmt.total_bits - 1)) - 1),
      truncate_(fmt.rounding == Rounding::Truncate) {}

double Fixed::quantize(double x) const {
    if (std::isnan(x))
        throw std::domain_error("NaN cannot be quantized to a fixed-point format");
    const double y = x * scale_;
    if (y >= static_cast<double>(hi_))
        return value(hi_);
    if (y <= static_cast<double>(lo_))
        return value(lo_);
    double r = std::floor(y);
    if (!truncate_) {
        const double diff = y - r;
        if (diff > 0.5 || (diff == 0.5 && std::fmod(r, 2.0) != 0.0))
            r += 1.0;
    }
    return value(static_cast<std::int64_t>(r));
}

Float::Float(const NumberFormat &fmt)
    : precision_(fmt.mantissa_bits + 1), truncate_(fmt.rounding == Rounding::Truncate) {
    const int emax = (1 << (fmt.exponent_bits - 1)) - 1;
    emin_ = 1 - emax;
    max_finite_ = std::ldexp(2.0 - std::ldexp(1.0, -fmt.mantissa_bits), emax);
}

double Float::round(double s, double err) const {
    // s == 0 with a TwoSum error term cannot happen: the exact sum is then 0.
    if (s == 0.0 || !std::isfinite(s))
        return s;
    const auto bits = std::bit_cast<std::uint64_t>(s);
    const bool neg = bits >> 63;
    const int biased = static_cast<int>((bits >> 52) & 0x7ff);
    if (biased == 0) // binary64 subnormal, far below half the smallest emulated subnormal
        return neg ? -0.0 : 0.0;

    const int e = biased - 1023;
    const std::uint64_t m = (bits & low_mask(52)) | (std::uint64_t{1} << 52);
    const int qexp = std::max(e, emin_) - (precision_ - 1);
    const int drop = qexp - (e - 52); // >= 53 - precision_ > 0
    const double err_mag = neg ? -err : err;

    std::uint64_t kept = 0;
    std::uint64_t rem = m;
    std::uint64_t half = ~std::uint64_t{0};
    if (drop <= 53) {
        kept = m >> drop;
        rem = m & low_mask(drop);
        half = std::uint64_t{1} << (drop - 1);
    }

    double mag;
    if (truncate_) {
        if (rem == 0 && err_mag < 0.0) {
            // Exactly on the grid but the true value is just below it.
            const bool binade_start = kept == (std::uint64_t{1} << (precision_ - 1)) && e > emin_;
            mag = binade_start ? static_cast<double>(2 * kept - 1) * pow2(qexp - 1)
                               : static_cast<double>(kept - 1) * pow2(qexp);
        } else {
            mag = static_cast<double>(kept) * pow2(qexp);
        }
        mag = std::min(mag, max_finite_);
    } else {
        if (rem > half || (rem == half && (err_mag > 0.0 || (err_mag == 0.0 && (kept & 1)))))
            ++kept;
        mag = static_cast<double>(kept) * pow2(qexp);
        if (mag > max_finite_)
            mag = std::numeric_limits<double>::infinity();
    }
    return neg ? -mag : mag;
}

} // namespace arith

Scalar::Scalar(NumberFormat fmt, std::uint64_t bits) : format_(fmt), bits_(bits) {
    if (fmt.total_bits < 64)
        bits_ &= low_mask(fmt.total_bits);
}

Scalar Scalar::from_value(double v, const NumberFormat &fmt) {
    switch (fmt.kind) {
    case FormatKind::FixedPoint: {
        const auto raw = static_cast<std::int64_t>(std::ldexp(v, fmt.fraction_bits));
        return Scalar(fmt, static_cast<std::uint64_t>(raw));
    }
    case FormatKind::FloatingPoint:
        return Scalar(fmt, encode_ieee(v, fmt.exponent_bits, fmt.mantissa_bits));
    case FormatKind::Reference:
        break;
    }
    return Scalar(fmt, std::bit_cast<std::uint64_t>(v));
}

double Scalar::value() const {
    switch (format_.kind) {
    case FormatKind::FixedPoint: {
        // Sign-extend the total_bits-wide pattern.
        const int shift = 64 - format_.total_bits;
        const auto raw = static_cast<std::int64_t>(bits_ << shift) >> shift;
        return std::ldexp(static_cast<double>(raw), -format_.fraction_bits);
    }
    case FormatKind::FloatingPoint:
        return decode_ieee(bits_, format_.exponent_bits, format_.mantissa_bits);
    case FormatKind::Reference:
        break;
    }
    return std::bit_cast<double>(bits_);
}

Scalar quantize(double x, const NumberFormat &fmt) {
    const double v = arith::visit(fmt, [x](const auto &ar) { return ar.quantize(x); });
    return Scalar::from_value(v, fmt);
}

Scalar mul(const Scalar &a, const Scalar &b) {
    require_same_format(a, b);
    const double v =
        arith::visit(a.format(), [&](const auto &ar) { return ar.mul(a.value(), b.value()); });
    return Scalar::from_value(v, a.format());
}

Scalar add(const Scalar &a, const Scalar &b) {
    require_same_format(a, b);
    const double v =
        arith::visit(a.format(), [&](const auto &ar) { return ar.add(a.value(), b.value()); });
    return Scalar::from_value(v, a.format());
}

Scalar sub(const Scalar &a, const Scalar &b) {
    require_same_format(a, b);
    const double v =
        arith::visit(a.format(), [&](const auto &ar) { return ar.sub(a.value(), b.value()); });
    return Scalar::from_value(v, a.format());
}

ComplexScalar cmul(const ComplexScalar &x, const ComplexScalar &y) {
    require_same_format(x.re, y.re);
    require_same_format(x.im, y.im);
    require_same_format(x.re, x.im);
    const Scalar ac = mul(x.re, y.re);
    const Scalar bd = mul(x.im, y.im);
    const Scalar ad = mul(x.re, y.im);
    const Scalar bc = mul(x.im, y.re);
    return {sub(ac, bd), add(ad, bc)};
}

} // namespace wfemu
