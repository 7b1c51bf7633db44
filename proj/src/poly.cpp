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

#include "trignum/poly.hpp"

#include "trignum/errors.hpp"

namespace trignum {

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> cs(p.coeffs().begin(), p.coeffs().end());
    return RatPoly(std::move(cs));
}

IntPoly to_integer_checked(const RatPoly& p) {
    std::vector<Integer> cs;
    cs.reserve(p.size());
    for (const auto& c : p.coeffs()) cs.push_back(to_integer_checked(c));
    return IntPoly(std::move(cs));
}

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    if (p.is_zero()) return {};
    if (p.degree() < d.degree()) throw NotDivisible("degree of dividend below degree of divisor");

    std::vector<Integer> rem = p.coeffs();
    const auto& dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    std::vector<Integer> q(rem.size() - dd);
    Integer r;
    for (std::size_t k = q.size(); k-- > 0;) {
        const Integer& top = rem[k + dd];
        if (sgn(top) == 0) continue;
        mpz_tdiv_r(r.get_mpz_t(), top.get_mpz_t(), dc[dd].get_mpz_t());
        if (sgn(r) != 0) throw NotDivisible("non-integer quotient coefficient at x^" + std::to_string(k));
        Integer qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), dc[dd].get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= qk * dc[j];
        q[k] = std::move(qk);
    }
    for (const auto& c : rem)
        if (sgn(c) != 0) throw NotDivisible("nonzero remainder");
    return IntPoly(std::move(q));
}

// Coefficient matching from the lowest nonzero coefficient upward:
// with p = x^{2v}(a_0 + a_1 x + ...) and q = x^v(b_0 + b_1 x + ...),
// a_k = 2 b_0 b_k + sum_{0<i<k} b_i b_{k-i}.
IntPoly exact_sqrt(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("exact_sqrt: zero polynomial");
    if (p.degree() % 2 != 0) throw NotASquare("odd degree " + std::to_string(p.degree()));
    const long v2 = p.valuation();
    if (v2 % 2 != 0) throw NotASquare("odd valuation");
    const long v = v2 / 2;
    const long half = p.degree() / 2 - v;  // degree of the unit part of q

    const Integer& a0 = p.coeffs()[v2];
    if (sgn(a0) < 0 || mpz_perfect_square_p(a0.get_mpz_t()) == 0)
        throw NotASquare("lowest coefficient " + a0.get_str() + " is not a square");
    std::vector<Integer> b(half + 1);
    mpz_sqrt(b[0].get_mpz_t(), a0.get_mpz_t());
    const Integer twice_b0 = 2 * b[0];

    Integer acc, r;
    for (long k = 1; k <= half; ++k) {
        acc = p.coeff(v2 + k);
        for (long i = 1; i < k; ++i) acc -= b[i] * b[k - i];
        mpz_tdiv_r(r.get_mpz_t(), acc.get_mpz_t(), twice_b0.get_mpz_t());
        if (sgn(r) != 0) throw NotASquare("coefficient matching fails at x^" + std::to_string(v + k));
        mpz_divexact(b[k].get_mpz_t(), acc.get_mpz_t(), twice_b0.get_mpz_t());
    }
    IntPoly q = IntPoly(std::move(b)).shifted(static_cast<std::size_t>(v));
    if (!(q * q == p)) throw NotASquare("square of candidate root differs");
    return q;
}

}  // namespace trignum
