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

#include "trignum/spread.hpp"

#include <algorithm>
#include <string>

#include "trignum/chebyshev.hpp"
#include "trignum/combinatorics.hpp"
#include "trignum/laurent.hpp"
#include "trignum/poly_series.hpp"
#include "trignum/riordan.hpp"

namespace trignum {

std::vector<IntPoly> spread_list(long n) {
    std::vector<IntPoly> s{IntPoly{}};
    if (n >= 1) s.push_back(IntPoly::x());
    const IntPoly a{2, -4};
    const IntPoly two_x{0, 2};
    for (long k = 2; k <= n; ++k) s.push_back(a * s[k - 1] - s[k - 2] + two_x);
    return s;
}

IntPoly spread_poly(long n) { return spread_list(n).back(); }

IntPoly spread_via_chebyshev(long n) {
    const IntPoly t = compose(chebyshev_t(n), IntPoly{1, -2});
    return to_integer_checked(to_rational(IntPoly{1} - t) * Rational(1, 2));
}

std::vector<IntPoly> zpread_list(long n) {
    std::vector<IntPoly> z{IntPoly{}};
    if (n >= 1) z.push_back(IntPoly::x());
    const IntPoly a{2, -1};
    const IntPoly two_x{0, 2};
    for (long k = 2; k <= n; ++k) z.push_back(a * z[k - 1] - z[k - 2] + two_x);
    return z;
}

IntPoly zpread_poly(long n) { return zpread_list(n).back(); }

IntPoly zpread_from_spread(long n) {
    return to_integer_checked(to_rational(spread_poly(n)).rescaled(Rational(1, 4)) * Rational(4));
}

void for_each_zpread(long max_n, const std::function<void(long, const IntPoly&)>& fn) {
    const IntPoly a{2, -1};
    const IntPoly two_x{0, 2};
    IntPoly prev;                // Z_{n-1}
    IntPoly cur = IntPoly::x();  // Z_n
    for (long n = 1; n <= max_n; ++n) {
        fn(n, cur);
        IntPoly next = a * cur - prev + two_x;
        prev = std::move(cur);
        cur = std::move(next);
    }
}

namespace {

IntMatrix coefficient_matrix(const std::vector<IntPoly>& polys, std::size_t size) {
    IntMatrix m(size, size);
    for (std::size_t n = 1; n <= size; ++n)
        for (std::size_t k = 1; k <= size; ++k) m(k - 1, n - 1) = polys[n].coeff(static_cast<long>(k));
    return m;
}

std::string at(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

IntMatrix spread_matrix(std::size_t size) { return coefficient_matrix(spread_list(static_cast<long>(size)), size); }
IntMatrix zpread_matrix(std::size_t size) { return coefficient_matrix(zpread_list(static_cast<long>(size)), size); }

IntMatrix shuffle_power_matrix(std::size_t size) {
    IntMatrix m(size, size);
    for (long n = 1; n <= static_cast<long>(size); ++n)
        for (long k = 1; k <= n; ++k) m(k - 1, n - 1) = sign_pow(k - 1) * binomial(2 * n, n - k);
    return m;
}

CheckReport zpread_matrix_check(std::size_t size) {
    CheckReport rep("spread.zpread_matrix", "Z_{mn} = (-1)^{m+1} p^{[2m]}_{n-m}, and Z^T = ((1+x)/(1-x)^3, -x/(1-x)^2)");
    const IntMatrix z = zpread_matrix(size);
    for (long m = 1; m <= static_cast<long>(size); ++m)
        for (long n = 1; n <= static_cast<long>(size); ++n) {
            ++rep.cases;
            const Integer want = n >= m ? Integer(sign_pow(m + 1) * pyramidal(2 * m, n - m)) : Integer(0);
            if (z(m - 1, n - 1) != want) rep.fail("Z entry (m,n)=" + at(m, n));
        }
    if (size > 0) {
        // Riordan array indices start at 0; Z starts at 1, so (a, b) <-> Z_{b+1, a+1}.
        const std::size_t order = size - 1;
        const TruncSeries one_minus_x = TruncSeries::one(order) - TruncSeries::x(order);
        const RiordanArray r((TruncSeries::one(order) + TruncSeries::x(order)) * pow(one_minus_x, -3),
                             -(TruncSeries::x(order) * pow(one_minus_x, -2)));
        const RatMatrix rm = riordan_matrix(r, size);
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b) {
                ++rep.cases;
                if (rm(a, b) != Rational(z(b, a))) rep.fail("Z^T vs Riordan entry " + at(a, b));
            }
    }
    return rep;
}

CheckReport hirschhorn_gf_check(long order, const Mutation& mut) {
    CheckReport rep("spread.hirschhorn", "(1-t)(1-2t+t^2+4tx) sum S_n(x) t^n = tx(1+t)");
    const auto N = static_cast<std::size_t>(order);
    std::vector<IntPoly> s = spread_list(order);
    if (mut.active && mut.index >= 1 && mut.index <= order) {
        std::vector<Integer> cs = s[mut.index].coeffs();
        cs.back() = -cs.back();
        s[mut.index] = IntPoly(std::move(cs));
    }
    const PolySeries<Integer> one_minus_t = {IntPoly{1}, IntPoly{-1}};
    const PolySeries<Integer> quad = {IntPoly{1}, IntPoly{-2, 4}, IntPoly{1}};
    const PolySeries<Integer> lhs = mul_truncated(mul_truncated(one_minus_t, quad, N), s, N);
    const PolySeries<Integer> rhs = {IntPoly{}, IntPoly{0, 1}, IntPoly{0, 1}};
    ++rep.cases;
    const long k = first_difference(lhs, rhs, N);
    if (k >= 0) rep.fail("coefficient of t^" + std::to_string(k) + " is " + to_string(lhs[k]));
    return rep;
}

CheckReport sqsin_reduction_check(long n) {
    CheckReport rep("spread.sqsin_reduction", "2^{2n-2} s^n = sum_k (-1)^{k-1} binom(2n,n-k) S_k(s), n=" + std::to_string(n));
    const auto s = spread_list(n);
    IntPoly rhs;
    for (long k = 1; k <= n; ++k) rhs += s[k] * Integer(sign_pow(k - 1) * binomial(2 * n, n - k));
    ++rep.cases;
    if (!(rhs == IntPoly::monomial(pow2(2 * n - 2), static_cast<std::size_t>(n)))) rep.fail("n=" + std::to_string(n));
    return rep;
}

CheckReport shuffle_inverse_check(std::size_t size) {
    CheckReport rep("spread.shuffle_inverse", "the shuffle-power matrix and Z are mutually inverse");
    const IntMatrix a = shuffle_power_matrix(size);
    const IntMatrix z = zpread_matrix(size);
    const IntMatrix id = IntMatrix::identity(size);
    rep.cases += 2;
    if (auto mm = first_mismatch(a * z, id)) rep.fail("A*Z entry " + at(mm->first, mm->second));
    if (auto mm = first_mismatch(z * a, id)) rep.fail("Z*A entry " + at(mm->first, mm->second));
    return rep;
}

CheckReport spreadometric_check(long order) {
    CheckReport rep("spread.spreadometric", "(1+x)/(1-x) s/((1-x)^2+4xs) = sum_n S_{n+1}(s) x^n, and 1/(1-x^2) at s=1");
    const auto N = static_cast<std::size_t>(order);
    const auto s = spread_list(order + 1);
    PolySeries<Integer> series(s.begin() + 1, s.end());
    const PolySeries<Integer> one_minus_x = {IntPoly{1}, IntPoly{-1}};
    const PolySeries<Integer> quad = {IntPoly{1}, IntPoly{-2, 4}, IntPoly{1}};
    const PolySeries<Integer> lhs = mul_truncated(mul_truncated(one_minus_x, quad, N), series, N);
    const PolySeries<Integer> rhs = {IntPoly{0, 1}, IntPoly{0, 1}};
    ++rep.cases;
    const long k = first_difference(lhs, rhs, N);
    if (k >= 0) rep.fail("coefficient of x^" + std::to_string(k));

    for (std::size_t n = 0; n <= N; ++n) {
        ++rep.cases;
        const Integer v = series[n].evaluate(Integer(1));
        if (v != (n % 2 == 0 ? 1 : 0)) rep.fail("s=1 specialization at x^" + std::to_string(n));
    }
    return rep;
}

CheckReport cigler_check(long n) {
    CheckReport rep("spread.cigler", "S_{2n}(x^2) = (1-x^2) U_{2n-1}^2, S_{2n+1}(x^2) = T_{2n+1}^2, and the Z forms");
    const auto s = spread_list(2 * n + 1);
    const auto z = zpread_list(2 * n + 1);
    const IntPoly x2{0, 0, 1};
    const IntPoly u = chebyshev_u(2 * n - 1);
    const IntPoly t = chebyshev_t(2 * n + 1);
    const IntPoly v = v_poly(2 * n - 1);
    const IntPoly p = p_poly(2 * n + 1);
    const std::string where = "n=" + std::to_string(n) + ", ";
    rep.cases += 4;
    if (!(compose(s[2 * n], x2) == IntPoly{1, 0, -1} * u * u)) rep.fail(where + "S even");
    if (!(compose(s[2 * n + 1], x2) == t * t)) rep.fail(where + "S odd");
    if (!(compose(z[2 * n], x2) == IntPoly{4, 0, -1} * v * v)) rep.fail(where + "Z even");
    if (!(compose(z[2 * n + 1], x2) == p * p)) rep.fail(where + "Z odd");
    return rep;
}

CheckReport spread_consistency_check(long max_n) {
    CheckReport rep("spread.consistency", "S_n = (1 - T_n(1-2x))/2 and Z_n = 4 S_n(x/4)");
    const auto s = spread_list(max_n);
    const auto z = zpread_list(max_n);
    const auto t = chebyshev_t_list(max_n);
    const IntPoly arg{1, -2};
    for (long n = 0; n <= max_n; ++n) {
        rep.cases += 2;
        const RatPoly via_t = to_rational(IntPoly{1} - compose(t[n], arg)) * Rational(1, 2);
        if (!(via_t == to_rational(s[n]))) rep.fail("Chebyshev form at n=" + std::to_string(n));
        const RatPoly rescaled = to_rational(s[n]).rescaled(Rational(1, 4)) * Rational(4);
        if (!(rescaled == to_rational(z[n]))) rep.fail("rescaling at n=" + std::to_string(n));
    }
    return rep;
}

CheckReport zpread_invariants_check(long max_comp, long max_n) {
    CheckReport rep("spread.zpread_invariants", "Z_m o Z_n = Z_{mn}; Z_n(0) = 0; Z_n(4) in {0,4}; lead Z_n = (-1)^{n+1}");
    const auto z = zpread_list(std::max(max_n, max_comp * max_comp));
    for (long m = 1; m <= max_comp; ++m)
        for (long n = 1; n <= max_comp; ++n) {
            ++rep.cases;
            if (!(compose(z[m], z[n]) == z[m * n])) rep.fail("composition (m,n)=" + at(m, n));
        }
    for (long n = 1; n <= max_n; ++n) {
        rep.cases += 4;
        if (z[n].evaluate(Integer(0)) != 0) rep.fail("Z_n(0) at n=" + std::to_string(n));
        if (z[n].evaluate(Integer(4)) != (n % 2 ? 4 : 0)) rep.fail("Z_n(4) at n=" + std::to_string(n));
        if (z[n].degree() != n) rep.fail("degree at n=" + std::to_string(n));
        if (z[n].lead() != sign_pow(n + 1)) rep.fail("leading coefficient at n=" + std::to_string(n));
    }
    return rep;
}

CheckReport shuffle_laurent_check(long max_n) {
    CheckReport rep("spread.shuffle_laurent", "Z_n(4 sin^2 theta) = 4 sin^2(n theta) in z = e^{i theta}");
    const RatLaurent sh = RatLaurent(2) - RatLaurent::monomial(1, 2) - RatLaurent::monomial(1, -2);
    const auto z = zpread_list(max_n);
    for (long n = 1; n <= max_n; ++n) {
        const RatLaurent want = RatLaurent(2) - RatLaurent::monomial(1, 2 * n) - RatLaurent::monomial(1, -2 * n);
        ++rep.cases;
        if (!(z[n].evaluate(sh) == want)) rep.fail("n=" + std::to_string(n));
    }
    return rep;
}

}  // namespace trignum
