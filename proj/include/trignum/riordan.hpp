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

#include "trignum/check.hpp"
#include "trignum/matrix.hpp"
#include "trignum/series.hpp"

namespace trignum {

inline constexpr std::size_t kDefaultRiordanOrder = 64;

/// The pair (g, f) with f(0) = 0; entry (n, k) of its matrix is [x^n] g f^k.
struct RiordanArray {
    TruncSeries g;
    TruncSeries f;

    /// Throws OrderMismatch if the orders differ, NotInvertible if f(0) != 0.
    RiordanArray(TruncSeries g_, TruncSeries f_);

    static RiordanArray identity(std::size_t order);

    std::size_t order() const noexcept { return g.order(); }
    bool proper() const { return sgn(g[0]) != 0; }

    friend bool operator==(const RiordanArray& a, const RiordanArray& b) { return a.g == b.g && a.f == b.f; }
};

/// Compositional inverse of f by Lagrange inversion: writing f = x/phi,
/// [y^n] fbar(y) = (1/n) [x^{n-1}] phi(x)^n. The result has the order of f.
/// NotInvertible when f(0) != 0 or f'(0) = 0.
TruncSeries lagrange_invert(const TruncSeries& f);

/// (g1 (g2 o f1), f2 o f1). OrderMismatch unless both orders agree.
RiordanArray riordan_mul(const RiordanArray& a, const RiordanArray& b);
/// (1/(g o fbar), fbar). NotProper when g(0) = 0.
RiordanArray riordan_inverse(const RiordanArray& a);
/// g (h o f). OrderMismatch unless h has the array's order.
TruncSeries riordan_apply(const RiordanArray& a, const TruncSeries& h);
/// Leading size x size block of the matrix. OrderMismatch if size-1 > order.
RatMatrix riordan_matrix(const RiordanArray& a, std::size_t size);

// Named series, all to the given order.
TruncSeries catalan_series(std::size_t order);
TruncSeries central_binomial_series(std::size_t order);
/// sum_m F_m(p, 1) x^m
TruncSeries generalized_binomial_series(long p, std::size_t order);

/// sum_j binom(2j+n, j-m) x^j = B C^n (C-1)^m to the given order
/// (binom(., negative) = 0; negative n uses powers of 1/C).
CheckReport binomial_series_identity(long n, long m, std::size_t order);

/// The four inversions of (C, xC^2), (C^2, xC^2), (B, xC^2), (BC, xC^2),
/// both through riordan_inverse and by multiplying with the stated inverse.
/// A mutation adds 1 to the coefficient of x^index in C.
CheckReport riordan_inversions_check(std::size_t order, const Mutation& mut = {});
/// If (g_i, f)^-1 = (G_i, F) for i = 1, 2 then (g_1 g_2, f)^-1 = (G_1 G_2, F),
/// on all pairs of the four arrays above that share f = xC^2.
CheckReport product_lemma_check(std::size_t order);
/// C o (x/(1+x)^2) = 1 + x, and xC^2 is the compositional inverse of x/(1+x)^2.
CheckReport catalan_composition_check(std::size_t order);
/// ((1+x)/(1-x)^3, -x/(1-x)^2) * (BC^2, -xC^2) = (1, x).
CheckReport zpread_riordan_check(std::size_t order);
/// (C, xC^2) and (C^2, xC^2) as matrices are the odd and even Catalan
/// triangles, and matrix-vector products agree with riordan_apply.
CheckReport riordan_matrix_check(std::size_t order);

}  // namespace trignum
