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
#include <optional>

#include "trignum/check.hpp"
#include "trignum/integer.hpp"
#include "trignum/matrix.hpp"

namespace trignum {

/// (1/2pi) int_0^{2pi} cos^n sin^m d theta, from the closed form:
/// 0 if n or m is odd, else M_{kl} / 2^{2(k+l)} with n = 2k, m = 2l.
Rational trig_integral(long n, long m);
/// The same value as the constant term of ((z+1/z)/2)^n ((z-1/z)/2i)^m.
Rational trig_integral_laurent(long n, long m);

/// (2k)!(2l)! / (k! l! (k+l)!). For k >= 1 the value is also compared with
/// binom(k+l-1, l) binom(2(k+l), k+l) / binom(2(k+l)-1, 2l); CheckFailed on
/// disagreement, NonIntegerCoefficient if the quotient is fractional.
Integer super_catalan(long k, long l);
/// The binomial-ratio form; nullopt where it is 0/0 (k = 0, l >= 1).
std::optional<Rational> super_catalan_ratio_form(long k, long l);
/// M_{kl} for 0 <= k, l < size.
IntMatrix super_catalan_matrix(std::size_t size);

/// Right-hand side of 2^{2m}/binom(2m,m) = sum_{l=0}^m binom(m-1,l) binom(m,l) / binom(2m-1,2l),
/// with the l = m term (0/0 as printed) taken to be 1.
Rational weirdhyp_sum(long m);
CheckReport weirdhyp_check(long m);

/// M = L diag(1,-2,2,-2,...) L^T with L_{ij} = binom(2i, i-j) at the given
/// size, det M^(n) = (-1)^{floor(n/2)} 2^{n-1} for n <= size (from D, and
/// by Bareiss elimination for n <= 12). A mutation adds 1 to M(index, index).
CheckReport lu_factorization_check(std::size_t size, const Mutation& mut = {});
/// M rebuilt entry by entry as the constant term of kappa^{2k} sigma^{2l}.
CheckReport m_matrix_derivation_check(std::size_t size);
/// trig_integral against trig_integral_laurent for 0 <= n, m <= 2 max + 1.
CheckReport trig_integral_oracle_check(long max);
/// (m+1) I_{n,m} = (n-1) I_{n-2,m+2} for 2 <= n <= max_n, 0 <= m <= max_m.
CheckReport integral_recurrence_check(long max_n, long max_m);
/// sum_{k+l=m} binom(m,l) 2^{-2m} M_{kl} = 1 for m <= max.
CheckReport partition_of_unity_check(long max);
/// Integrality of super_catalan(k, l) and agreement with the ratio form for
/// k, l <= max; symmetry and first row binom(2k,k).
CheckReport super_catalan_check(long max);

/// Fraction-free Gaussian elimination determinant.
Integer bareiss_determinant(IntMatrix m);

}  // namespace trignum
