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

#include "trignum/fourier.hpp"

#include <string>
#include <vector>

#include "trignum/basechange.hpp"
#include "trignum/combinatorics.hpp"
#include "trignum/errors.hpp"
#include "trignum/laurent.hpp"

namespace trignum {

namespace {

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

std::string kl(long k, long l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

}  // namespace

Rational trig_integral(long n, long m) {
    if (n < 0 || m < 0) throw std::invalid_argument("trig_integral needs n, m >= 0");
    if (n % 2 || m % 2) return 0;
    const long k = n / 2, l = m / 2;
    return make_rational(super_catalan(k, l), pow2(2 * (k + l)));
}

Rational trig_integral_laurent(long n, long m) {
    const GaussianRational half(Rational(1, 2));
    const GaussLaurent c = GaussLaurent::kappa_multiple(1) * half;
    const GaussLaurent s =
        (GaussLaurent::monomial(1, 1) - GaussLaurent::monomial(1, -1)) * (half / GaussianRational::i());
    const GaussianRational ct =
        constant_term_of_product(pow(c, static_cast<unsigned>(n)), pow(s, static_cast<unsigned>(m)));
    if (!ct.is_real()) throw CheckFailed("constant term of a real integrand is not real");
    return ct.re();
}

std::optional<Rational> super_catalan_ratio_form(long k, long l) {
    const long s = k + l;
    const Integer den = binomial(2 * s - 1, 2 * l);
    if (sgn(den) == 0) return std::nullopt;
    return make_rational(binomial(s - 1, l) * binomial(2 * s, s), den);
}

Integer super_catalan(long k, long l) {
    if (k < 0 || l < 0) throw std::invalid_argument("super_catalan needs k, l >= 0");
    const Integer num = factorial(2 * k) * factorial(2 * l);
    const Integer den = factorial(k) * factorial(l) * factorial(k + l);
    const Integer v = to_integer_checked(make_rational(num, den));
    if (k >= 1) {
        auto r = super_catalan_ratio_form(k, l);
        if (!r || *r != Rational(v)) throw CheckFailed("super Catalan forms disagree at " + kl(k, l));
    }
    return v;
}

IntMatrix super_catalan_matrix(std::size_t size) {
    IntMatrix m(size, size);
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t l = 0; l < size; ++l) m(k, l) = super_catalan(static_cast<long>(k), static_cast<long>(l));
    return m;
}

Rational weirdhyp_sum(long m) {
    Rational acc = 0;
    for (long l = 0; l <= m; ++l) {
        if (l == m) {
            acc += 1;
            continue;
        }
        acc += make_rational(binomial(m - 1, l) * binomial(m, l), binomial(2 * m - 1, 2 * l));
    }
    return acc;
}

CheckReport weirdhyp_check(long m) {
    CheckReport rep("fourier.weirdhyp", "2^{2m}/binom(2m,m) = sum_l binom(m-1,l) binom(m,l)/binom(2m-1,2l)");
    const Rational lhs = make_rational(pow2(2 * m), central_binomial(m));
    const Rational rhs = weirdhyp_sum(m);
    ++rep.cases;
    if (lhs != rhs) rep.fail("m=" + std::to_string(m) + ": " + lhs.get_str() + " vs " + rhs.get_str());
    return rep;
}

Integer bareiss_determinant(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

CheckReport lu_factorization_check(std::size_t size, const Mutation& mut) {
    CheckReport rep("fourier.lu", "M = L diag(1,-2,2,...) L^T and det M^(n) = (-1)^{floor(n/2)} 2^{n-1}");
    IntMatrix m = super_catalan_matrix(size);
    if (mut.active && size > 0) {
        const auto i = std::min<std::size_t>(static_cast<std::size_t>(std::max(0L, mut.index)), size - 1);
        m(i, i) += 1;
    }
    IntMatrix L(size, size), D(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j <= i; ++j) L(i, j) = binomial(2 * static_cast<long>(i), static_cast<long>(i - j));
        D(i, i) = i == 0 ? 1 : (i % 2 ? -2 : 2);
    }
    ++rep.cases;
    if (auto mm = first_mismatch(L * D * L.transposed(), m))
        rep.fail("M entry " + kl(static_cast<long>(mm->first), static_cast<long>(mm->second)) + " differs from L D L^T");

    Integer det_from_d = 1;
    for (std::size_t n = 1; n <= size; ++n) {
        det_from_d *= D(n - 1, n - 1);
        const long ln = static_cast<long>(n);
        const Integer want = sign_pow(ln / 2) * pow2(ln - 1);
        ++rep.cases;
        if (det_from_d != want) rep.fail("det from D at n=" + std::to_string(n));
        if (n <= 12) {
            ++rep.cases;
            if (bareiss_determinant(m.block(n)) != want) rep.fail("Bareiss determinant at n=" + std::to_string(n));
        }
    }
    return rep;
}

CheckReport m_matrix_derivation_check(std::size_t size) {
    CheckReport rep("fourier.m_derivation", "M_{kl} = constant term of kappa^{2k} sigma^{2l}");
    std::vector<RatLaurent> kp, sp;
    for (std::size_t k = 0; k < size; ++k) {
        kp.push_back(laurent_expand_real(TrigBasis::KappaPower, 2 * static_cast<long>(k)));
        sp.push_back(laurent_expand_real(TrigBasis::SigmaPower, 2 * static_cast<long>(k)));
    }
    const IntMatrix m = super_catalan_matrix(size);
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t l = 0; l < size; ++l) {
            ++rep.cases;
            if (constant_term_of_product(kp[k], sp[l]) != Rational(m(k, l)))
                rep.fail("entry " + kl(static_cast<long>(k), static_cast<long>(l)));
        }
    return rep;
}

CheckReport trig_integral_oracle_check(long max) {
    CheckReport rep("fourier.trig_integral", "closed-form trigonometric moments equal Laurent constant terms");
    const long top = 2 * max + 1;
    const GaussianRational half(Rational(1, 2));
    const GaussLaurent c = GaussLaurent::kappa_multiple(1) * half;
    const GaussLaurent s =
        (GaussLaurent::monomial(1, 1) - GaussLaurent::monomial(1, -1)) * (half / GaussianRational::i());
    std::vector<GaussLaurent> cp{GaussLaurent(1)}, sp{GaussLaurent(1)};
    for (long n = 1; n <= top; ++n) {
        cp.push_back(cp.back() * c);
        sp.push_back(sp.back() * s);
    }
    for (long n = 0; n <= top; ++n)
        for (long m = 0; m <= top; ++m) {
            const GaussianRational ct = constant_term_of_product(cp[n], sp[m]);
            ++rep.cases;
            if (!(ct == GaussianRational(trig_integral(n, m)))) rep.fail("(n,m)=" + kl(n, m));
        }
    return rep;
}

CheckReport integral_recurrence_check(long max_n, long max_m) {
    CheckReport rep("fourier.integral_recurrence", "(m+1) I_{n,m} = (n-1) I_{n-2,m+2}");
    for (long n = 2; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m) {
            ++rep.cases;
            if (Rational(m + 1) * trig_integral(n, m) != Rational(n - 1) * trig_integral(n - 2, m + 2))
                rep.fail("(n,m)=" + kl(n, m));
        }
    return rep;
}

CheckReport partition_of_unity_check(long max) {
    CheckReport rep("fourier.partition_of_unity", "sum_{k+l=m} binom(m,l) 2^{-2m} M_{kl} = 1");
    for (long m = 0; m <= max; ++m) {
        Integer acc = 0;
        for (long l = 0; l <= m; ++l) acc += binomial(m, l) * super_catalan(m - l, l);
        ++rep.cases;
        if (acc != pow2(2 * m)) rep.fail("m=" + std::to_string(m));
    }
    return rep;
}

CheckReport super_catalan_check(long max) {
    CheckReport rep("fourier.super_catalan", "super Catalan numbers are integers, symmetric, with first row binom(2k,k)");
    for (long k = 0; k <= max; ++k)
        for (long l = 0; l <= max; ++l) {
            ++rep.cases;
            try {
                const Integer v = super_catalan(k, l);  // integrality and ratio form
                if (l == 0 && v != central_binomial(k)) rep.fail("first column at k=" + std::to_string(k));
                if (l < k && v != super_catalan(l, k)) rep.fail("symmetry at " + kl(k, l));
            } catch (const Error& e) {
                rep.fail(kl(k, l) + ": " + e.what());
            }
        }
    return rep;
}

}  // namespace trignum
