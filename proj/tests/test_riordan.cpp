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

#include "trignum/combinatorics.hpp"
#include "trignum/errors.hpp"
#include "trignum/riordan.hpp"

using namespace trignum;

namespace {

TruncSeries one(std::size_t n) { return TruncSeries::one(n); }
TruncSeries x(std::size_t n) { return TruncSeries::x(n); }

}  // namespace

TEST(Lagrange, InvertsKnownSeries) {
    const std::size_t N = 20;
    // x/(1+x)^2 has inverse xC^2
    const auto f = x(N) * pow(one(N) + x(N), -2);
    const auto fbar = lagrange_invert(f);
    EXPECT_TRUE(compose(f, fbar) == x(N));
    EXPECT_TRUE(compose(fbar, f) == x(N));
    const auto c = catalan_series(N);
    EXPECT_TRUE(fbar == x(N) * c * c);
    EXPECT_THROW(lagrange_invert(one(N)), NotInvertible);
    EXPECT_THROW(lagrange_invert(x(N) * x(N)), NotInvertible);
}

TEST(Lagrange, RandomRoundTrip) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t N = 12;
        std::vector<Rational> cs(N + 1);
        cs[1] = c(rng) == 0 ? 1 : c(rng) | 1;
        for (std::size_t k = 2; k <= N; ++k) cs[k] = c(rng);
        const TruncSeries f(N, cs);
        EXPECT_TRUE(compose(f, lagrange_invert(f)) == x(N));
    }
}

TEST(RiordanGroup, AxiomsOnRandomArrays) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> c(-4, 4);
    const std::size_t N = 10;
    auto rnd = [&] {
        std::vector<Rational> g(N + 1), f(N + 1);
        for (auto& v : g) v = c(rng);
        for (auto& v : f) v = c(rng);
        g[0] = 1 + (c(rng) & 1);
        f[0] = 0;
        f[1] = 1 + (c(rng) & 1);
        return RiordanArray(TruncSeries(N, g), TruncSeries(N, f));
    };
    for (int trial = 0; trial < 15; ++trial) {
        const auto a = rnd(), b = rnd(), d = rnd();
        EXPECT_TRUE(riordan_mul(riordan_mul(a, b), d) == riordan_mul(a, riordan_mul(b, d)));
        EXPECT_TRUE(riordan_mul(a, riordan_inverse(a)) == RiordanArray::identity(N));
        EXPECT_TRUE(riordan_mul(riordan_inverse(a), a) == RiordanArray::identity(N));
        // the matrix of a product is the product of the matrices
        EXPECT_TRUE(riordan_matrix(riordan_mul(a, b), N + 1) == riordan_matrix(a, N + 1) * riordan_matrix(b, N + 1));
    }
}

TEST(RiordanGroup, Errors) {
    EXPECT_THROW(RiordanArray(one(4), one(4)), NotInvertible);
    EXPECT_THROW(RiordanArray(one(4), x(5)), OrderMismatch);
    EXPECT_THROW(riordan_inverse(RiordanArray(x(4), x(4))), NotProper);
    EXPECT_THROW(riordan_mul(RiordanArray::identity(4), RiordanArray::identity(5)), OrderMismatch);
}

TEST(RiordanGroup, CatalanTimesStatedInverse) {
    const std::size_t N = 40;
    const auto c = catalan_series(N);
    const RiordanArray a(c, x(N) * c * c);
    const RiordanArray b(mul_inverse(one(N) + x(N)), x(N) * pow(one(N) + x(N), -2));
    EXPECT_TRUE(riordan_mul(a, b) == RiordanArray::identity(N));
}

TEST(NamedSeries, Coefficients) {
    const auto c = catalan_series(15), b = central_binomial_series(15);
    for (long n = 0; n <= 15; ++n) {
        EXPECT_EQ(c[n], Rational(catalan(n)));
        EXPECT_EQ(b[n], Rational(central_binomial(n)));
    }
    // B = 1/sqrt(1-4x): B^2 (1-4x) = 1
    EXPECT_TRUE(b * b * (one(15) - Rational(4) * x(15)) == one(15));
    // p = 2 gives C
    EXPECT_TRUE(generalized_binomial_series(2, 15) == c);
}

TEST(Theorems, BinomialSeriesIdentity) {
    for (long n : {-1L, 0L, 1L, 2L, 3L})
        for (long m : {0L, 1L, 2L, 3L}) EXPECT_TRUE(binomial_series_identity(n, m, 25).passed) << n << "," << m;
}

TEST(Theorems, InversionsAndLemma) {
    EXPECT_TRUE(riordan_inversions_check(30).passed);
    EXPECT_TRUE(product_lemma_check(30).passed);
    EXPECT_TRUE(catalan_composition_check(30).passed);
    EXPECT_TRUE(zpread_riordan_check(30).passed);
    EXPECT_TRUE(riordan_matrix_check(20).passed);
}

TEST(Theorems, InversionNegativeControl) {
    const CheckReport r = riordan_inversions_check(20, Mutation::at(3));
    EXPECT_FALSE(r.passed);
    EXPECT_NE(r.counterexample.find("x^3"), std::string::npos) << r.counterexample;
}
