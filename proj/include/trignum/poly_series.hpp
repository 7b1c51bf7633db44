/*
   Copyright 2026 The trignum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <vector>

#include "trignum/poly.hpp"

namespace trignum {

/// Truncated power series in t whose coefficients are polynomials in a
/// second variable: s[k] is the coefficient of t^k. Degrees in the inner
/// variable are finite per t-power, so all arithmetic is exact.
template <class R>
using PolySeries = std::vector<Poly<R>>;

/// Product truncated after t^order.
template <class R>
PolySeries<R> mul_truncated(const PolySeries<R>& a, const PolySeries<R>& b, std::size_t order) {
    PolySeries<R> r(order + 1);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// Index of the first t-power where a and b differ (missing entries are
/// zero), or -1.
template <class R>
long first_difference(const PolySeries<R>& a, const PolySeries<R>& b, std::size_t order) {
    for (std::size_t k = 0; k <= order; ++k) {
        const Poly<R> x = k < a.size() ? a[k] : Poly<R>();
        const Poly<R> y = k < b.size() ? b[k] : Poly<R>();
        if (!(x == y)) return static_cast<long>(k);
    }
    return -1;
}

}  // namespace trignum
