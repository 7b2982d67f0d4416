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

// Reference models of the emulated formats built from first principles:
// binary16 by enumerating every bit pattern, fixed point by exact scaling.

#pragma once

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

/// Value of a binary16 bit pattern, decoded from the field definitions.
inline double half_value(std::uint16_t h) {
    const int sign = h >> 15;
    const int exp = (h >> 10) & 0x1f;
    const int man = h & 0x3ff;
    double v;
    if (exp == 0)
        v = std::ldexp(man, -24);
    else if (exp == 31)
        v = man ? std::numeric_limits<double>::quiet_NaN() : std::numeric_limits<double>::infinity();
    else
        v = std::ldexp(1024 + man, exp - 25);
    return sign ? -v : v;
}

/// Round-to-nearest-even into binary16 by exhaustive search of the finite
/// non-negative patterns.
class HalfTable {
  public:
    HalfTable() {
        for (std::uint16_t h = 0; h < 0x7c00; ++h)
            values_.push_back(half_value(h));
    }

    double round(double x) const {
        if (std::isnan(x))
            return x;
        const double ax = std::fabs(x);
        // Halfway between the largest finite value and the next power step.
        const double overflow = 65520.0;
        double r;
        if (ax >= overflow) {
            r = std::numeric_limits<double>::infinity();
        } else {
            auto it = std::lower_bound(values_.begin(), values_.end(), ax);
            if (it == values_.end()) {
                r = values_.back();
            } else if (*it == ax || it == values_.begin()) {
                r = *it;
            } else {
                const auto hi = static_cast<std::size_t>(it - values_.begin());
                const double up = values_[hi], dn = values_[hi - 1];
                if (ax - dn < up - ax)
                    r = dn;
                else if (up - ax < ax - dn)
                    r = up;
                else
                    r = (hi % 2 == 0) ? up : dn; // even pattern wins the tie
            }
        }
        return std::signbit(x) ? -r : r;
    }

    const std::vector<double> &values() const { return values_; }

  private:
    std::vector<double> values_;
};

/// Round-to-nearest-even into 1+1+f fixed point with saturation.
inline double fixed_round(double x, int frac_bits) {
    const double scale = std::ldexp(1.0, frac_bits);
    const double hi = (std::ldexp(1.0, frac_bits + 1) - 1.0) / scale;
    const double lo = -2.0;
    std::fesetround(FE_TONEAREST);
    const double r = std::nearbyint(x * scale) / scale;
    return std::clamp(r, lo, hi);
}

} // namespace oracle
