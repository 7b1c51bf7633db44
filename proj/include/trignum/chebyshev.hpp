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

#include <string>
#include <vector>

#include "trignum/check.hpp"
#include "trignum/integer.hpp"
#include "trignum/matrix.hpp"
#include "trignum/poly.hpp"

namespace trignum {

IntPoly chebyshev_t(long n);
IntPoly chebyshev_u(long n);
/// T_0..T_n (resp. U_0..U_n) from the three-term recursion.
std::vector<IntPoly> chebyshev_t_list(long n);
std::vector<IntPoly> chebyshev_u_list(long n);

/// P_0 = 1, P_n(z) = 2 T_n(z/2) for n > 0.
IntPoly p_poly(long n);
/// V_n(z) = U_n(z/2).
IntPoly v_poly(long n);

/// T_n and U_n assembled from pyramidal numbers and binomials rather than
/// from the recursion.
IntPoly t_closed_form(long n);
IntPoly u_closed_form(long n);

enum class ChebKind { T, U, P, V };

/// Entry (m, n) is the coefficient of x^m in the n-th polynomial of the family.
IntMatrix cheb_matrix(ChebKind kind, std::size_t size);

/// P built without any polynomial arithmetic: row 1 holds the odd numbers,
/// row 0 their difference pattern, each further row the partial sums of the
/// row above; row i is placed on the diagonal starting at column i with
/// alternating signs along it.
IntMatrix mnemonic_p_matrix(std::size_t size);

/// 2 {n; k}, via D(n,k) = 2 D(n-1,k) - D(n,k-1) with D(n,0) = 2^n,
/// D(0,0) = 1 and D(0,k) = 2 (-1)^k.
Integer brace_doubled(long n, long k);
/// {n; k} exactly; only {0; 0} = 1/2 is not an integer.
Rational brace(long n, long k);

/// T_n and U_n against multiple-angle expansions in z = e^{i theta}, for the
/// cosine substitution (over Q) and the sine substitution (over Q(i)).
CheckReport verify_trig_values(long n);

/// Generating functions of T, U and P as series in t with polynomial
/// coefficients, through t^order. A mutation negates the leading coefficient
/// of T_index.
CheckReport gf_check_chebyshev(long order, const Mutation& mut = {});

/// x T_{n-1} + (x^2-1) U_{n-2} = T_n and T_n + x U_{n-1} = U_n for 1 <= n <= max_n.
CheckReport chebyshev_proof_identities(long max_n);
/// Closed forms against the recursion for 0 <= n <= max_n.
CheckReport closed_form_check(long max_n);
/// Parity of T, U, P, V and 2 T_n(z/2) = P_n for n <= max_n.
CheckReport parity_and_depowering_check(long max_n);
/// Mnemonic P against recursion P, brace numbers against T rows, and the
/// nonzero entries of P against signed pyramidal numbers.
CheckReport p_matrix_check(long size);

}  // namespace trignum
