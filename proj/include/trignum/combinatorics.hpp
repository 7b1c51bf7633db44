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

#include <array>
#include <optional>
#include <vector>

#include "trignum/integer.hpp"
#include "trignum/matrix.hpp"

namespace trignum {

/// binom(n, k) with the falling-factorial convention n(n-1)...(n-k+1)/k!,
/// so n may be negative. NegativeK for k < 0.
Integer binomial(const Integer& n, long k);
Integer binomial(long n, long k);
/// Same, but 0 for k < 0 instead of throwing.
Integer binomial0(long n, long k);

/// p_j^{[i]} = 2 binom(i+j, j) - binom(i+j-1, j), the coefficient of t^j in
/// (1+t)/(1-t)^{i+1}; zero for j < 0.
Integer pyramidal(long i, long j);
/// rows[i][j] = p_j^{[i]} for 0 <= i < rows, 0 <= j < cols.
std::vector<std::vector<Integer>> pyramidal_table(long rows, long cols);

Integer catalan(long n);
Integer central_binomial(long n);
/// C_0..C_n from the Segner recursion C_n = sum_{k<n} C_k C_{n-1-k}.
std::vector<Integer> catalan_segner(long n);

/// F_m(p, r) = r/(mp+r) binom(mp+r, m), with F_0 = 1.
/// DegenerateDenominator when m > 0 and mp + r = 0.
Rational fuss_catalan(long m, long p, long r);
/// The three textbook closed forms of F_m(p, r):
///   r/(mp+r) binom(mp+r, m),  r/(m(p-1)+r) binom(mp+r-1, m),  r/m binom(mp+r-1, m-1).
/// A form is nullopt when its denominator vanishes.
std::array<std::optional<Rational>, 3> fuss_catalan_forms(long m, long p, long r);

/// B^even_{ij} = (j/i) binom(2i, i-j) for 1 <= j <= i.
Integer catalan_triangle_even(long i, long j);
/// B^odd_{ij} = ((2j+1)/(2i+1)) binom(2i+1, i-j) for 0 <= j <= i.
Integer catalan_triangle_odd(long i, long j);
/// n x n lower triangles; the even one is shifted so that entry (0,0) is B^even_{11}.
IntMatrix catalan_even_matrix(std::size_t n);
IntMatrix catalan_odd_matrix(std::size_t n);

long totient(long d);
int moebius(long d);
/// q if d = q^k for a prime q and k >= 1, else 1.
long a014963(long d);
bool is_prime(long n);
/// Positive divisors in increasing order.
std::vector<long> divisors(long n);

}  // namespace trignum
