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

#include "trignum/riordan.hpp"

#include <string>

#include "trignum/combinatorics.hpp"
#include "trignum/errors.hpp"

namespace trignum {

RiordanArray::RiordanArray(TruncSeries g_, TruncSeries f_) : g(std::move(g_)), f(std::move(f_)) {
    if (g.order() != f.order()) throw OrderMismatch("Riordan pair with orders " + std::to_string(g.order()) +
                                                    " and " + std::to_string(f.order()));
    if (sgn(f[0]) != 0) throw NotInvertible("Riordan pair needs f(0) = 0");
}

RiordanArray RiordanArray::identity(std::size_t order) {
    return RiordanArray(TruncSeries::one(order), TruncSeries::x(order));
}

TruncSeries lagrange_invert(const TruncSeries& f) {
    if (sgn(f[0]) != 0) throw NotInvertible("compositional inverse needs f(0) = 0");
    const std::size_t N = f.order();
    if (N == 0) return TruncSeries(0);
    if (sgn(f[1]) == 0) throw NotInvertible("compositional inverse needs f'(0) != 0");
    const TruncSeries phi = mul_inverse(f.divided_by_x());  // order N-1
    TruncSeries out(N);
    TruncSeries phi_n = TruncSeries::one(N - 1);
    for (std::size_t n = 1; n <= N; ++n) {
        phi_n = phi_n * phi;
        out.set(n, phi_n[n - 1] / Rational(static_cast<long>(n)));
    }
    return out;
}

namespace {

void require_same_order(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw OrderMismatch(std::string(what) + ": orders " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

RiordanArray riordan_mul(const RiordanArray& a, const RiordanArray& b) {
    require_same_order(a.order(), b.order(), "riordan_mul");
    return RiordanArray(a.g * compose(b.g, a.f), compose(b.f, a.f));
}

RiordanArray riordan_inverse(const RiordanArray& a) {
    if (!a.proper()) throw NotProper("Riordan inverse needs g(0) != 0");
    TruncSeries fbar = lagrange_invert(a.f);
    TruncSeries g = mul_inverse(compose(a.g, fbar));
    return RiordanArray(std::move(g), std::move(fbar));
}

TruncSeries riordan_apply(const RiordanArray& a, const TruncSeries& h) {
    require_same_order(a.order(), h.order(), "riordan_apply");
    return a.g * compose(h, a.f);
}

RatMatrix riordan_matrix(const RiordanArray& a, std::size_t size) {
    if (size == 0) return RatMatrix();
    if (size - 1 > a.order()) throw OrderMismatch("riordan_matrix larger than the series order");
    RatMatrix m(size, size);
    TruncSeries col = a.g.truncated(size - 1);
    const TruncSeries f = a.f.truncated(size - 1);
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t n = 0; n < size; ++n) m(n, k) = col[n];
        col = col * f;
    }
    return m;
}

TruncSeries catalan_series(std::size_t order) {
    TruncSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s.set(n, Rational(catalan(static_cast<long>(n))));
    return s;
}

TruncSeries central_binomial_series(std::size_t order) {
    TruncSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s.set(n, Rational(central_binomial(static_cast<long>(n))));
    return s;
}

TruncSeries generalized_binomial_series(long p, std::size_t order) {
    TruncSeries s(order);
    for (std::size_t m = 0; m <= order; ++m) s.set(m, fuss_catalan(static_cast<long>(m), p, 1));
    return s;
}

namespace {

std::string series_mismatch(const char* what, const TruncSeries& got, const TruncSeries& want) {
    const long k = first_difference(got, want);
    return std::string(what) + ": coefficient of x^" + std::to_string(k) + " is " + got[k].get_str() +
           ", expected " + want[k].get_str();
}

void expect_series(CheckReport& rep, const char* what, const TruncSeries& got, const TruncSeries& want) {
    ++rep.cases;
    if (!(got == want)) rep.fail(series_mismatch(what, got, want));
}

void expect_array(CheckReport& rep, const std::string& what, const RiordanArray& got, const RiordanArray& want) {
    ++rep.cases;
    if (!(got.g == want.g)) rep.fail(series_mismatch((what + ", g").c_str(), got.g, want.g));
    if (!(got.f == want.f)) rep.fail(series_mismatch((what + ", f").c_str(), got.f, want.f));
}

// The series of the inversion theorem, shared by several checks.
struct Pieces {
    TruncSeries C, B, x, one_plus_x, xC2, fbar;
    explicit Pieces(std::size_t N, const Mutation& mut = {})
        : C(catalan_series(N)),
          B(central_binomial_series(N)),
          x(TruncSeries::x(N)),
          one_plus_x(TruncSeries::one(N) + TruncSeries::x(N)),
          xC2(N),
          fbar(N) {
        if (mut.active && mut.index >= 0 && static_cast<std::size_t>(mut.index) <= N)
            C.set(mut.index, C[mut.index] + 1);
        xC2 = x * C * C;
        fbar = x * pow(one_plus_x, -2);
    }
};

}  // namespace

CheckReport binomial_series_identity(long n, long m, std::size_t order) {
    CheckReport rep("riordan.binomial_series",
                    "sum_j binom(2j+n, j-m) x^j = B C^n (C-1)^m, n=" + std::to_string(n) + ", m=" + std::to_string(m));
    TruncSeries lhs(order);
    for (std::size_t j = 0; j <= order; ++j) {
        const long jj = static_cast<long>(j);
        lhs.set(j, Rational(binomial0(2 * jj + n, jj - m)));
    }
    const TruncSeries C = catalan_series(order);
    const TruncSeries rhs = central_binomial_series(order) * pow(C, n) * pow(C - TruncSeries::one(order), m);
    expect_series(rep, "coefficients", lhs, rhs);
    return rep;
}

CheckReport riordan_inversions_check(std::size_t order, const Mutation& mut) {
    CheckReport rep("riordan.inversions", "(C,xC^2), (C^2,xC^2), (B,xC^2), (BC,xC^2) have the stated inverses");
    const Pieces P(order, mut);
    const TruncSeries one = TruncSeries::one(order);
    const TruncSeries inv1 = mul_inverse(P.one_plus_x);
    const TruncSeries one_minus_x = one - P.x;
    struct Case {
        const char* name;
        TruncSeries g, G;
    };
    const Case cases[] = {
        {"(C,xC^2)", P.C, inv1},
        {"(C^2,xC^2)", P.C * P.C, inv1 * inv1},
        {"(B,xC^2)", P.B, one_minus_x * inv1},
        {"(BC,xC^2)", P.B * P.C, one_minus_x * inv1 * inv1},
    };
    const RiordanArray id = RiordanArray::identity(order);
    for (const auto& c : cases) {
        const RiordanArray A(c.g, P.xC2);
        const RiordanArray stated(c.G, P.fbar);
        expect_array(rep, std::string(c.name) + " * stated inverse", riordan_mul(A, stated), id);
        expect_array(rep, std::string("stated inverse * ") + c.name, riordan_mul(stated, A), id);
        expect_array(rep, std::string(c.name) + "^-1", riordan_inverse(A), stated);
    }
    return rep;
}

CheckReport product_lemma_check(std::size_t order) {
    CheckReport rep("riordan.product_lemma", "(g1,f)^-1 = (G1,F) and (g2,f)^-1 = (G2,F) imply (g1 g2,f)^-1 = (G1 G2,F)");
    const Pieces P(order);
    const TruncSeries gs[] = {P.C, P.C * P.C, P.B, P.B * P.C};
    const char* names[] = {"C", "C^2", "B", "BC"};
    const RiordanArray id = RiordanArray::identity(order);
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            const RiordanArray a = riordan_inverse(RiordanArray(gs[i], P.xC2));
            const RiordanArray b = riordan_inverse(RiordanArray(gs[j], P.xC2));
            ++rep.cases;
            if (!(a.f == b.f)) rep.fail(std::string("inverses of ") + names[i] + ", " + names[j] + " differ in F");
            const RiordanArray prod(gs[i] * gs[j], P.xC2);
            const RiordanArray claimed(a.g * b.g, a.f);
            expect_array(rep, std::string("(") + names[i] + "*" + names[j] + ",xC^2) * (G1 G2, F)",
                         riordan_mul(prod, claimed), id);
        }
    return rep;
}

CheckReport catalan_composition_check(std::size_t order) {
    CheckReport rep("riordan.catalan_composition", "C o (x/(1+x)^2) = 1 + x and the inverse of x/(1+x)^2 is xC^2");
    const Pieces P(order);
    expect_series(rep, "C o fbar", compose(P.C, P.fbar), P.one_plus_x);
    expect_series(rep, "Lagrange inverse of x/(1+x)^2", lagrange_invert(P.fbar), P.xC2);
    expect_series(rep, "Lagrange inverse of xC^2", lagrange_invert(P.xC2), P.fbar);
    return rep;
}

CheckReport zpread_riordan_check(std::size_t order) {
    CheckReport rep("riordan.zpread", "((1+x)/(1-x)^3, -x/(1-x)^2) * (BC^2, -xC^2) = (1, x)");
    const Pieces P(order);
    const TruncSeries one_minus_x = TruncSeries::one(order) - P.x;
    const RiordanArray a(P.one_plus_x * pow(one_minus_x, -3), -(P.x * pow(one_minus_x, -2)));
    const RiordanArray b(P.B * P.C * P.C, -P.xC2);
    const RiordanArray id = RiordanArray::identity(order);
    expect_array(rep, "product", riordan_mul(a, b), id);
    expect_array(rep, "reverse product", riordan_mul(b, a), id);
    return rep;
}

CheckReport riordan_matrix_check(std::size_t order) {
    CheckReport rep("riordan.matrix_view", "(C,xC^2) = B^odd, (C^2,xC^2) = B^even, and (g,f) h = g (h o f) as vectors");
    const Pieces P(order);
    const std::size_t n = order + 1;
    const RatMatrix odd = riordan_matrix(RiordanArray(P.C, P.xC2), n);
    const RatMatrix even = riordan_matrix(RiordanArray(P.C * P.C, P.xC2), n);
    const IntMatrix bo = catalan_odd_matrix(n);
    const IntMatrix be = catalan_even_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rep.cases += 2;
            if (odd(i, j) != Rational(bo(i, j)))
                rep.fail("(C,xC^2) entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (even(i, j) != Rational(be(i, j)))
                rep.fail("(C^2,xC^2) entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // Fundamental theorem against a matrix-vector product.
    const TruncSeries h = mul_inverse(TruncSeries::one(order) - P.x);
    const TruncSeries applied = riordan_apply(RiordanArray(P.C, P.xC2), h);
    TruncSeries mv(order);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j <= i; ++j) acc += odd(i, j) * h[j];
        mv.set(i, acc);
    }
    expect_series(rep, "apply vs matrix-vector", applied, mv);
    return rep;
}

}  // namespace trignum
