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
#include <functional>
#include <vector>

#include "trignum/check.hpp"
#include "trignum/matrix.hpp"
#include "trignum/poly.hpp"

namespace trignum {

/// S_0 = 0, S_1 = x, S_n = 2(1-2x) S_{n-1} - S_{n-2} + 2x.
IntPoly spread_poly(long n);
std::vector<IntPoly> spread_list(long n);
/// (1 - T_n(1-2x)) / 2
IntPoly spread_via_chebyshev(long n);

/// Z_n(x) = 4 S_n(x/4), generated by its own integer recursion
/// Z_n = (2-x) Z_{n-1} - Z_{n-2} + 2x.
IntPoly zpread_poly(long n);
std::vector<IntPoly> zpread_list(long n);
/// 4 S_n(x/4) computed from spread_poly; NonIntegerCoefficient if it leaves Z[x].
IntPoly zpread_from_spread(long n);
/// Calls fn(n, Z_n) for n = 1..max_n, keeping only two polynomials alive.
void for_each_zpread(long max_n, const std::function<void(long, const IntPoly&)>& fn);

/// size x size matrices with entry (m-1, n-1) = [x^m] S_n (resp. Z_n), m, n >= 1.
IntMatrix spread_matrix(std::size_t size);
IntMatrix zpread_matrix(std::size_t size);
/// Entry (k-1, n-1) = (-1)^{k-1} binom(2n, n-k): shuffle^n in the shuffle(k theta) basis.
IntMatrix shuffle_power_matrix(std::size_t size);

/// Z_{mn} = (-1)^{m+1} p^{[2m]}_{n-m} for 1 <= m <= n <= size, and Z^T equals
/// the matrix of the Riordan array ((1+x)/(1-x)^3, -x/(1-x)^2).
CheckReport zpread_matrix_check(std::size_t size);
/// (1-t)(1-2t+t^2+4tx) sum S_n t^n = tx(1+t) through t^order. A mutation
/// negates the leading coefficient of S_index.
CheckReport hirschhorn_gf_check(long order, const Mutation& mut = {});
/// 2^{2n-2} s^n = sum_{k=1}^n (-1)^{k-1} binom(2n, n-k) S_k(s).
CheckReport sqsin_reduction_check(long n);
/// shuffle_power_matrix * zpread_matrix = I (both orders).
CheckReport shuffle_inverse_check(std::size_t size);
/// (1+x) s = (1-x)((1-x)^2 + 4xs) sum_n S_{n+1}(s) x^n through x^order, and
/// at s = 1 the series is 1/(1-x^2).
CheckReport spreadometric_check(long order);
/// S_{2n}(x^2) = (1-x^2) U_{2n-1}(x)^2, S_{2n+1}(x^2) = T_{2n+1}(x)^2,
/// Z_{2n}(x^2) = (4-x^2) V_{2n-1}(x)^2, Z_{2n+1}(x^2) = 4 T_{2n+1}(x/2)^2 = P_{2n+1}(x)^2.
CheckReport cigler_check(long n);
/// S recursion vs (1 - T_n(1-2x))/2 and Z recursion vs 4 S_n(x/4), n <= max_n.
CheckReport spread_consistency_check(long max_n);
/// Z_m o Z_n = Z_{mn} (m, n <= max_comp); Z_n(0) = 0, Z_n(4) = 4 for odd n and
/// 0 for even n, deg Z_n = n, lead(Z_n) = (-1)^{n+1} (n <= max_n).
CheckReport zpread_invariants_check(long max_comp, long max_n);
/// Z_n(shuffle(theta)) = shuffle(n theta) as Laurent polynomials in z = e^{i theta}.
CheckReport shuffle_laurent_check(long max_n);

}  // namespace trignum
