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

#include <gtest/gtest.h>

#include <random>

#include "trignum/errors.hpp"
#include "trignum/laurent.hpp"
#include "trignum/matrix.hpp"
#include "trignum/parallel.hpp"
#include "trignum/poly.hpp"
#include "trignum/quadint.hpp"
#include "trignum/series.hpp"

using namespace trignum;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-bound, bound);
    std::vector<Integer> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : cs) x = c(rng);
    return IntPoly(std::move(cs));
}

TruncSeries random_series(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<Rational> cs(order + 1);
    for (auto& x : cs) x = make_rational(num(rng), den(rng));
    return TruncSeries(order, cs);
}

}  // namespace

TEST(Integer, RationalIsCanonical) {
    const Rational q = make_rational(6, -4);
    EXPECT_EQ(q.get_num(), -3);
    EXPECT_EQ(q.get_den(), 2);
    EXPECT_THROW(to_integer_checked(q), NonIntegerCoefficient);
    EXPECT_EQ(to_integer_checked(make_rational(-8, 4)), -2);
}

TEST(Integer, PowersAndSigns) {
    EXPECT_EQ(pow2(70).get_str(), "1180591620717411303424");
    EXPECT_EQ(ipow(Integer(-3), 5), -243);
    EXPECT_EQ(sign_pow(3), -1);
    EXPECT_EQ(sign_pow(-2), 1);
}

TEST(Poly, ArithmeticAndPrinting) {
    const IntPoly p{1, 0, -8, 0, 8};
    EXPECT_EQ(p.degree(), 4);
    EXPECT_EQ(to_string(p), "1 - 8x^2 + 8x^4");
    EXPECT_EQ(to_string(IntPoly{}), "0");
    EXPECT_TRUE((IntPoly{1, 1} * IntPoly{1, -1}) == (IntPoly{1, 0, -1}));
    EXPECT_TRUE((IntPoly{1, 2} - IntPoly{1, 2}).is_zero());
}

TEST(Poly, CompositionMatchesEvaluation) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const IntPoly p = random_poly(rng, 6, 9), q = random_poly(rng, 4, 9);
        const IntPoly pq = compose(p, q);
        for (long x = -3; x <= 3; ++x) EXPECT_EQ(pq.evaluate(Integer(x)), p.evaluate(q.evaluate(Integer(x))));
    }
}

TEST(Poly, ExactDivisionRoundTrip) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly a = random_poly(rng, 8, 20);
        IntPoly d = random_poly(rng, 5, 20);
        if (d.is_zero()) continue;
        EXPECT_TRUE(exact_div(a * d, d) == a);
    }
    EXPECT_THROW(exact_div(IntPoly{1, 0, 1}, IntPoly{1, 1}), NotDivisible);
    EXPECT_THROW(exact_div(IntPoly{1, 1}, IntPoly{2}), NotDivisible);
}

TEST(Poly, ExactSquareRoot) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly q = random_poly(rng, 7, 30);
        if (q.is_zero()) continue;
        const IntPoly r = exact_sqrt(q * q);
        EXPECT_TRUE(r == q || r == -q);
        EXPECT_GT(r.coeff(r.valuation()), 0);
    }
    EXPECT_TRUE(exact_sqrt(IntPoly{25, -50, 35, -10, 1}) == (IntPoly{5, -5, 1}));
    EXPECT_THROW(exact_sqrt(IntPoly{4, 0, 1}), NotASquare);
    EXPECT_THROW(exact_sqrt(IntPoly{-1}), NotASquare);
    EXPECT_THROW(exact_sqrt(IntPoly{0, 1}), NotASquare);
}

TEST(Series, RingAxioms) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(rng, 12), b = random_series(rng, 12), c = random_series(rng, 12);
        EXPECT_TRUE(a * (b + c) == a * b + a * c);
        EXPECT_TRUE((a * b) * c == a * (b * c));
        EXPECT_TRUE(a * b == b * a);
    }
}

TEST(Series, InverseAndNegativePowers) {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_series(rng, 15);
        if (sgn(a[0]) == 0) a.set(0, 1);
        EXPECT_TRUE(a * mul_inverse(a) == TruncSeries::one(15));
        EXPECT_TRUE(pow(a, -3) * pow(a, 3) == TruncSeries::one(15));
    }
    EXPECT_THROW(mul_inverse(TruncSeries::x(5)), ConstantTermZero);
    // 1/(1-x) = 1 + x + x^2 + ...
    const auto geo = mul_inverse(TruncSeries::one(6) - TruncSeries::x(6));
    for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(geo[k], 1);
}

TEST(Series, OrderIsMinimumOfOperands) {
    const auto a = TruncSeries::one(10), b = TruncSeries::x(4);
    EXPECT_EQ((a * b).order(), 4u);
    EXPECT_EQ((a + b).order(), 4u);
    EXPECT_THROW(b.truncated(8), OrderMismatch);
}

TEST(Series, Composition) {
    EXPECT_THROW(compose(TruncSeries::one(4), TruncSeries::one(4)), InnerConstantNonzero);
    // 1/(1-y) at y = x/(1-x) is (1-x)/(1-2x): coefficients 1, 1, 2, 4, 8, ...
    const std::size_t N = 10;
    const auto geo = mul_inverse(TruncSeries::one(N) - TruncSeries::x(N));
    const auto inner = TruncSeries::x(N) * geo;
    const auto r = compose(geo, inner);
    EXPECT_EQ(r[0], 1);
    for (std::size_t k = 1; k <= N; ++k) EXPECT_EQ(r[k], pow2(k - 1));
}

TEST(Laurent, KappaSquareAndConstantTerm) {
    const RatLaurent k = RatLaurent::kappa_multiple(1);
    const RatLaurent k2 = k * k;
    EXPECT_TRUE(k2 == RatLaurent::kappa_multiple(2) + RatLaurent(2));
    EXPECT_EQ(laurent_constant_term(pow(k, 4)), 6);
    EXPECT_EQ(constant_term_of_product(pow(k, 2), pow(k, 2)), laurent_constant_term(pow(k, 4)));
    EXPECT_TRUE(RatLaurent::kappa_multiple(0) == RatLaurent(2));
    EXPECT_TRUE((RatLaurent::monomial(3, 2).inverted()) == RatLaurent::monomial(3, -2));
}

TEST(Laurent, GaussianSineSquare) {
    // sigma = -i(z - 1/z); sigma^2 = 2 - z^2 - z^-2
    const GaussLaurent s = (GaussLaurent::monomial(1, 1) - GaussLaurent::monomial(1, -1)) * (-GaussianRational::i());
    const GaussLaurent want = GaussLaurent(2) - GaussLaurent::monomial(1, 2) - GaussLaurent::monomial(1, -2);
    EXPECT_TRUE(s * s == want);
}

TEST(QuadInt, RingAxiomsAndGoldenIdentity) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> d(-50, 50);
    auto rnd = [&] { return QuadInt{Integer(d(rng)), Integer(d(rng))}; };
    const QuadInt phi = QuadInt::phi();
    EXPECT_TRUE(phi * phi == phi + QuadInt(1));
    for (int trial = 0; trial < 200; ++trial) {
        const QuadInt a = rnd(), b = rnd(), c = rnd();
        EXPECT_TRUE((a * b) * c == a * (b * c));
        EXPECT_TRUE(a * (b + c) == a * b + a * c);
        EXPECT_TRUE(a * b == b * a);
        EXPECT_TRUE(a - a == QuadInt(0));
        EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
        EXPECT_TRUE((a * b).conj() == a.conj() * b.conj());
    }
    EXPECT_EQ(to_string(QuadInt{Integer(2), Integer(1)}), "2+phi");
    EXPECT_TRUE(QuadInt(Integer(2), Integer(1)) * QuadInt(Integer(2), Integer(1)) == QuadInt(Integer(5), Integer(5)));
}

TEST(Matrix, ProductAndTranspose) {
    IntMatrix a(2, 3), b(3, 2);
    int v = 1;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) a(i, j) = v++;
    b = a.transposed();
    const IntMatrix p = a * b;
    EXPECT_EQ(p(0, 0), 14);
    EXPECT_EQ(p(0, 1), 32);
    EXPECT_EQ(p(1, 1), 77);
    EXPECT_THROW(a * a, std::invalid_argument);
    EXPECT_FALSE(first_mismatch(IntMatrix::identity(3), IntMatrix::identity(3)).has_value());
}

TEST(Parallel, OutputOrderIndependentOfThreads) {
    auto fn = [](std::size_t i) { return static_cast<long>(i * i); };
    const auto one = parallel_map<long>(100, 1, fn);
    const auto many = parallel_map<long>(100, 8, fn);
    EXPECT_EQ(one, many);
    EXPECT_THROW(parallel_map<int>(10, 4, [](std::size_t i) -> int {
                     if (i == 7) throw std::runtime_error("boom");
                     return 0;
                 }),
                 std::runtime_error);
}
