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
#include <string>
#include <vector>

#include "trignum/check.hpp"
#include "trignum/integer.hpp"
#include "trignum/laurent.hpp"
#include "trignum/matrix.hpp"

namespace trignum {

// With z = e^{i theta}: kappa = 2cos = z + 1/z, sigma = 2sin = -i(z - 1/z),
// nu_m = sin((m+1)theta)/sin(theta) = sum_{j=0}^m z^{m-2j},
// shuffle(theta) = 4 sin^2(theta) = 2 - z^2 - z^-2.
enum class TrigBasis {
    KappaMultiple,    // 1, kappa(theta), kappa(2 theta), ...
    Nu,               // nu_0, nu_1, ...
    KappaPower,       // kappa^0, kappa^1, ...
    SigmaPower,       // sigma^0, sigma^1, ...
    SigmaMultiple,    // sigma(0) = 0, sigma(theta), sigma(2 theta), ...
    ShuffleMultiple,  // shuffle(0) = 0, shuffle(theta), shuffle(2 theta), ...
    ShufflePower,     // shuffle^0, shuffle^1, ...
};

/// Canonical Laurent representative of element k of a basis.
GaussLaurent laurent_expand(TrigBasis basis, long k);
/// Same for bases with real representatives; throws std::domain_error for
/// odd powers and multiples of sigma.
RatLaurent laurent_expand_real(TrigBasis basis, long k);

enum class PowerKind { CosEven, CosOdd, SinEven, SinOdd };

/// Multiple-angle coefficients a_k of
///   CosEven: 2^{2n-1} cos^{2n} = a_0 + sum_{k>=1} a_k cos(2k theta)      (n >= 1)
///   CosOdd:  2^{2n} cos^{2n+1} = sum_{k>=0} a_k cos((2k+1) theta)
///   SinEven: 2^{2n-1} sin^{2n} = a_0 + sum_{k>=1} a_k cos(2k theta)      (n >= 1)
///   SinOdd:  2^{2n} sin^{2n+1} = sum_{k>=0} a_k sin((2k+1) theta)
/// The centre term a_0 = binom(2n,n)/2 of the even kinds is kept exact.
std::vector<Rational> power_reduce(PowerKind kind, long n);
/// power_reduce against the Laurent expansion of both sides.
CheckReport power_reduce_check(PowerKind kind, long n);

/// even: kappa^{2n} = sum_{k=0}^n B^odd_{nk} nu_{2k}; result[k] is the
///       coefficient of nu_{2k}.
/// odd:  kappa^{2n-1} = sum_{k=1}^n B^even_{nk} nu_{2k-1} (n >= 1); result[k-1]
///       is the coefficient of nu_{2k-1}.
std::vector<Integer> cos_power_to_nu(bool even, long n);
CheckReport cos_power_to_nu_check(bool even, long n);

enum class Transition { Inv1, Inv2, Inv3, Inv4, PyrCat1, PyrCat2, PyrCat3, PyrCat4 };

std::string to_string(Transition t);

/// Upper triangular size x size matrix from its entry formula; column j
/// expresses the j-th target element in the source basis.
IntMatrix transition_matrix(Transition which, std::size_t size);

/// Column j of each matrix, read through laurent_expand, reproduces the
/// element it claims to expand.
CheckReport transition_laurent_check(Transition which, std::size_t size);

enum class TransitionPair { Inv12, Inv34, PyrCat12, PyrCat34 };

/// A B = B A = I for the pair. A mutation adds 1 to entry (0, index) of the
/// second matrix of the pair.
CheckReport verify_mutual_inverse(TransitionPair pair, std::size_t size, const Mutation& mut = {});
/// PyrCat1^T = B^odd = (C, xC^2) and PyrCat3^T = B^even = (C^2, xC^2);
/// PyrCat2^T and PyrCat4^T are their inverses.
CheckReport pyrcat_transpose_check(std::size_t size);
/// ct(kappa(m) kappa(n)) = 2 delta_mn for 1 <= m, n <= max, ct(kappa(n)) = 0
/// for n >= 1, ct(1) = 1.
CheckReport orthogonality_check(long max);

/// The four closed cosine series, as identities in Q[c][[x]] with c = cos(theta)
/// after clearing denominators, through x^order. A mutation flips the sign
/// of the x c^2 term in the denominator of item `index` (1..4).
CheckReport closed_series_checks(long order, const Mutation& mut = {});

}  // namespace trignum
