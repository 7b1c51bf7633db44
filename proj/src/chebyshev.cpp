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

#include "trignum/chebyshev.hpp"

#include "trignum/combinatorics.hpp"
#include "trignum/errors.hpp"
#include "trignum/laurent.hpp"
#include "trignum/poly_series.hpp"

namespace trignum {

namespace {

std::vector<IntPoly> three_term(long n, IntPoly p0, IntPoly p1) {
    std::vector<IntPoly> out;
    out.reserve(n + 1);
    out.push_back(std::move(p0));
    if (n >= 1) out.push_back(std::move(p1));
    for (long k = 2; k <= n; ++k) out.push_back(out[k - 1].shifted(1) * Integer(2) - out[k - 2]);
    return out;
}

IntPoly halve_argument(const IntPoly& p, const Integer& factor) {
    return to_integer_checked(to_rational(p).rescaled(Rational(1, 2)) * Rational(factor));
}

std::string poly_where(const char* what, long n, const std::string& detail) {
    return std::string(what) + " n=" + std::to_string(n) + (detail.empty() ? "" : ", " + detail);
}

}  // namespace

std::vector<IntPoly> chebyshev_t_list(long n) { return three_term(n, IntPoly{1}, IntPoly::x()); }
std::vector<IntPoly> chebyshev_u_list(long n) { return three_term(n, IntPoly{1}, IntPoly{0, 2}); }

IntPoly chebyshev_t(long n) { return chebyshev_t_list(n).back(); }
IntPoly chebyshev_u(long n) { return chebyshev_u_list(n).back(); }

IntPoly p_poly(long n) {
    if (n == 0) return IntPoly{1};
    return halve_argument(chebyshev_t(n), 2);
}

IntPoly v_poly(long n) { return halve_argument(chebyshev_u(n), 1); }

IntPoly t_closed_form(long n) {
    std::vector<Integer> c(n + 1);
    const long k = n / 2;
    if (n % 2 == 0) {
        c[0] = sign_pow(k);
        for (long j = 1; j <= k; ++j) c[2 * j] = sign_pow(k + j) * pow2(2 * j - 1) * pyramidal(2 * j, k - j);
    } else {
        for (long j = 0; j <= k; ++j) c[2 * j + 1] = sign_pow(k + j) * pow2(2 * j) * pyramidal(2 * j + 1, k - j);
    }
    return IntPoly(std::move(c));
}

IntPoly u_closed_form(long n) {
    std::vector<Integer> c(n + 1);
    const long k = n / 2;
    if (n % 2 == 0) {
        for (long j = 0; j <= k; ++j) c[2 * j] = sign_pow(k + j) * pow2(2 * j) * binomial(k + j, 2 * j);
    } else {
        for (long j = 0; j <= k; ++j)
            c[2 * j + 1] = sign_pow(k + j) * pow2(2 * j + 1) * binomial(k + j + 1, 2 * j + 1);
    }
    return IntPoly(std::move(c));
}

IntMatrix cheb_matrix(ChebKind kind, std::size_t size) {
    IntMatrix m(size, size);
    if (size == 0) return m;
    const long last = static_cast<long>(size) - 1;
    std::vector<IntPoly> polys;
    switch (kind) {
        case ChebKind::T: polys = chebyshev_t_list(last); break;
        case ChebKind::U: polys = chebyshev_u_list(last); break;
        case ChebKind::P:
            for (long n = 0; n <= last; ++n) polys.push_back(p_poly(n));
            break;
        case ChebKind::V:
            for (long n = 0; n <= last; ++n) polys.push_back(v_poly(n));
            break;
    }
    for (std::size_t n = 0; n < size; ++n)
        for (std::size_t k = 0; k < polys[n].size(); ++k) m(k, n) = polys[n].coeffs()[k];
    return m;
}

IntMatrix mnemonic_p_matrix(std::size_t size) {
    IntMatrix m(size, size);
    if (size == 0) return m;
    const std::size_t len = size;
    std::vector<std::vector<Integer>> rows(size, std::vector<Integer>(len));
    std::vector<Integer> odd(len);
    for (std::size_t j = 0; j < len; ++j) odd[j] = 2 * j + 1;
    rows[0][0] = odd[0];
    for (std::size_t j = 1; j < len; ++j) rows[0][j] = odd[j] - odd[j - 1];
    if (size > 1) rows[1] = odd;
    for (std::size_t i = 2; i < size; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < len; ++j) {
            acc += rows[i - 1][j];
            rows[i][j] = acc;
        }
    }
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; i + 2 * j < size; ++j) m(i, i + 2 * j) = sign_pow(static_cast<long>(j)) * rows[i][j];
    return m;
}

Integer brace_doubled(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("brace numbers need n, k >= 0");
    std::vector<std::vector<Integer>> d(n + 1, std::vector<Integer>(k + 1));
    for (long a = 0; a <= n; ++a)
        for (long b = 0; b <= k; ++b) {
            if (a == 0)
                d[a][b] = b == 0 ? Integer(1) : Integer(2 * sign_pow(b));
            else if (b == 0)
                d[a][b] = pow2(a);
            else
                d[a][b] = 2 * d[a - 1][b] - d[a][b - 1];
        }
    return d[n][k];
}

Rational brace(long n, long k) { return make_rational(brace_doubled(n, k), 2); }

CheckReport verify_trig_values(long n) {
    CheckReport rep("chebyshev.trig_values",
                    "T_n, U_n at cos(theta) and sin(theta) equal their multiple-angle expansions");
    const IntPoly t = chebyshev_t(n);
    const IntPoly u = chebyshev_u(n);
    const Rational half(1, 2);

    auto compare = [&](const auto& got, const auto& want, const char* which) {
        ++rep.cases;
        bool differ = false;
        long at = first_difference(got, want, &differ);
        if (differ) rep.fail(poly_where(which, n, "first differing monomial z^" + std::to_string(at)));
    };

    // cosine substitution, over Q
    const RatLaurent c = RatLaurent::kappa_multiple(1) * half;
    const RatLaurent s_times_i = (RatLaurent::monomial(1, 1) - RatLaurent::monomial(1, -1)) * half;
    compare(t.evaluate(c), RatLaurent::kappa_multiple(n) * half, "T_n(cos)");
    compare(s_times_i * u.evaluate(c),
            (RatLaurent::monomial(1, n + 1) - RatLaurent::monomial(1, -(n + 1))) * half, "sin*U_n(cos)");

    // sine substitution, over Q(i)
    const GaussianRational gi = GaussianRational::i();
    const GaussianRational ghalf(half);
    const GaussLaurent gc = GaussLaurent::kappa_multiple(1) * ghalf;
    const GaussLaurent gs =
        (GaussLaurent::monomial(1, 1) - GaussLaurent::monomial(1, -1)) * (ghalf / gi);
    auto cos_k = [&](long k) { return GaussLaurent::kappa_multiple(k) * ghalf; };
    auto sin_k = [&](long k) {
        return (GaussLaurent::monomial(1, k) - GaussLaurent::monomial(1, -k)) * (ghalf / gi);
    };
    const GaussianRational sign(sign_pow(n / 2));
    compare(t.evaluate(gs), (n % 2 == 0 ? cos_k(n) : sin_k(n)) * sign, "T_n(sin)");
    compare(gc * u.evaluate(gs), (n % 2 == 0 ? cos_k(n + 1) : sin_k(n + 1)) * sign, "cos*U_n(sin)");
    return rep;
}

CheckReport gf_check_chebyshev(long order, const Mutation& mut) {
    CheckReport rep("chebyshev.gf", "(1-2tx+t^2) sum T_n t^n = 1-tx, (1-2tx+t^2) sum U_n t^n = 1, "
                                    "(1-zt+t^2) sum P_n t^n = 1-t^2");
    const auto N = static_cast<std::size_t>(order);
    std::vector<IntPoly> t = chebyshev_t_list(order);
    std::vector<IntPoly> u = chebyshev_u_list(order);
    std::vector<IntPoly> p;
    for (long n = 0; n <= order; ++n) p.push_back(p_poly(n));
    if (mut.active && mut.index >= 0 && mut.index <= order) {
        IntPoly& victim = t[mut.index];
        std::vector<Integer> cs = victim.coeffs();
        cs.back() = -cs.back();
        victim = IntPoly(std::move(cs));
    }

    const PolySeries<Integer> den2 = {IntPoly{1}, IntPoly{0, -2}, IntPoly{1}};
    const PolySeries<Integer> den1 = {IntPoly{1}, IntPoly{0, -1}, IntPoly{1}};
    struct Item {
        const char* name;
        const PolySeries<Integer>& den;
        const std::vector<IntPoly>& family;
        PolySeries<Integer> rhs;
    };
    const Item items[] = {
        {"T", den2, t, {IntPoly{1}, IntPoly{0, -1}}},
        {"U", den2, u, {IntPoly{1}}},
        {"P", den1, p, {IntPoly{1}, IntPoly{}, IntPoly{-1}}},
    };
    for (const auto& it : items) {
        const auto lhs = mul_truncated(it.den, it.family, N);
        ++rep.cases;
        long k = first_difference(lhs, it.rhs, N);
        if (k >= 0) {
            const IntPoly got = static_cast<std::size_t>(k) < lhs.size() ? lhs[k] : IntPoly();
            rep.fail(std::string(it.name) + " series: coefficient of t^" + std::to_string(k) + " is " + to_string(got));
        }
    }
    return rep;
}

CheckReport chebyshev_proof_identities(long max_n) {
    CheckReport rep("chebyshev.proof_identities", "x T_{n-1} + (x^2-1) U_{n-2} = T_n and T_n + x U_{n-1} = U_n");
    const auto t = chebyshev_t_list(max_n);
    const auto u = chebyshev_u_list(max_n);
    const IntPoly x2m1{-1, 0, 1};
    for (long n = 1; n <= max_n; ++n) {
        const IntPoly u2 = n >= 2 ? u[n - 2] : IntPoly();
        rep.cases += 2;
        if (!(t[n - 1].shifted(1) + x2m1 * u2 == t[n])) rep.fail(poly_where("first identity", n, ""));
        if (!(t[n] + u[n - 1].shifted(1) == u[n])) rep.fail(poly_where("second identity", n, ""));
    }
    return rep;
}

CheckReport closed_form_check(long max_n) {
    CheckReport rep("chebyshev.closed_forms", "pyramidal/binomial formulas for T_n, U_n equal the recursion");
    const auto t = chebyshev_t_list(max_n);
    const auto u = chebyshev_u_list(max_n);
    for (long n = 0; n <= max_n; ++n) {
        rep.cases += 2;
        if (!(t_closed_form(n) == t[n])) rep.fail(poly_where("T", n, ""));
        if (!(u_closed_form(n) == u[n])) rep.fail(poly_where("U", n, ""));
    }
    return rep;
}

CheckReport parity_and_depowering_check(long max_n) {
    CheckReport rep("chebyshev.parity", "F_n(-x) = (-1)^n F_n(x) for T, U, P, V and 2 T_n(z/2) = P_n");
    const auto t = chebyshev_t_list(max_n);
    const auto u = chebyshev_u_list(max_n);
    const Integer minus_one(-1);
    for (long n = 0; n <= max_n; ++n) {
        const IntPoly p = p_poly(n);
        const IntPoly v = v_poly(n);
        const Integer sgn_n(sign_pow(n));
        const IntPoly* fam[] = {&t[n], &u[n], &p, &v};
        const char* names[] = {"T", "U", "P", "V"};
        for (int f = 0; f < 4; ++f) {
            ++rep.cases;
            if (!(fam[f]->rescaled(minus_one) == *fam[f] * sgn_n)) rep.fail(poly_where(names[f], n, "parity"));
        }
        if (n >= 1) {
            ++rep.cases;
            RatPoly twice = to_rational(t[n]).rescaled(Rational(1, 2)) * Rational(2);
            if (!(twice == to_rational(p))) rep.fail(poly_where("P", n, "depowering"));
        }
    }
    return rep;
}

CheckReport p_matrix_check(long size) {
    CheckReport rep("chebyshev.p_matrix", "mnemonic P equals recursion P; P and brace numbers match pyramidal rows and T");
    const auto N = static_cast<std::size_t>(size);
    const IntMatrix p = cheb_matrix(ChebKind::P, N);
    const IntMatrix t = cheb_matrix(ChebKind::T, N);
    ++rep.cases;
    if (auto mm = first_mismatch(mnemonic_p_matrix(N), p))
        rep.fail("mnemonic P differs at (" + std::to_string(mm->first) + "," + std::to_string(mm->second) + ")");
    for (long i = 0; i < size; ++i)
        for (long j = 0; i + 2 * j < size; ++j) {
            rep.cases += 2;
            if (p(i, i + 2 * j) != sign_pow(j) * pyramidal(i, j))
                rep.fail("P(" + std::to_string(i) + "," + std::to_string(i + 2 * j) + ") is not (-1)^j p_j^[i]");
            const Rational want = (i == 0 && j == 0) ? Rational(t(0, 0)) / 2 : Rational(t(i, i + 2 * j));
            if (brace(i, j) != want)
                rep.fail("brace {" + std::to_string(i) + ";" + std::to_string(j) + "} is not T(n, n+2k)");
        }
    return rep;
}

}  // namespace trignum
