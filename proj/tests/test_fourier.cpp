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

#include <cmath>

#include "golden.hpp"
#include "trignum/combinatorics.hpp"
#include "trignum/fourier.hpp"

using namespace trignum;

TEST(TrigIntegral, SmallValues) {
    EXPECT_EQ(trig_integral(0, 0), 1);
    EXPECT_EQ(trig_integral(2, 0), Rational(1, 2));
    EXPECT_EQ(trig_integral(2, 2), Rational(1, 8));
    EXPECT_EQ(trig_integral(4, 0), Rational(3, 8));
    EXPECT_EQ(trig_integral(3, 2), 0);
    EXPECT_EQ(trig_integral_laurent(2, 2), Rational(1, 8));
}

TEST(TrigIntegral, MidpointQuadrature) {
    // The integrand is a trigonometric polynomial of degree <= 12, so the
    // equally spaced rule with 64 nodes is exact up to rounding.
    const int K = 64;
    for (long n = 0; n <= 6; ++n)
        for (long m = 0; m <= 6; ++m) {
            double s = 0;
            for (int j = 0; j < K; ++j) {
                const double th = 2 * M_PI * j / K;
                s += std::pow(std::cos(th), n) * std::pow(std::sin(th), m);
            }
            EXPECT_NEAR(s / K, trig_integral(n, m).get_d(), 1e-12) << n << "," << m;
        }
}

TEST(SuperCatalan, PrintedMatrixAndForms) {
    EXPECT_TRUE(golden::differences(super_catalan_matrix(7), golden::kM).empty());
    EXPECT_EQ(super_catalan(1, 1), 2);
    EXPECT_FALSE(super_catalan_ratio_form(0, 2).has_value());
    EXPECT_EQ(*super_catalan_ratio_form(3, 2), Rational(super_catalan(3, 2)));
    for (long k = 0; k <= 10; ++k) EXPECT_EQ(super_catalan(1, k), 2 * catalan(k));
    EXPECT_TRUE(super_catalan_check(25).passed);
}

TEST(Weirdhyp, ExactIdentity) {
    for (long m = 1; m <= 60; ++m) EXPECT_TRUE(weirdhyp_check(m).passed) << m;
    EXPECT_EQ(weirdhyp_sum(1), 2);
}

TEST(LU, FactorizationAndDeterminants) {
    EXPECT_TRUE(lu_factorization_check(15).passed);
    const CheckReport bad = lu_factorization_check(6, Mutation::at(1));
    EXPECT_FALSE(bad.passed);
    EXPECT_NE(bad.counterexample.find("(1,1)"), std::string::npos) << bad.counterexample;
}

TEST(Bareiss, SmallMatrices) {
    IntMatrix a(3, 3);
    const long v[3][3] = {{0, 2, 1}, {1, 0, 3}, {4, 5, 6}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a(i, j) = v[i][j];
    EXPECT_EQ(bareiss_determinant(a), 17);
    EXPECT_EQ(bareiss_determinant(IntMatrix::identity(5)), 1);
    EXPECT_EQ(bareiss_determinant(IntMatrix(2, 2)), 0);
}

TEST(Checks, DerivationRecurrenceUnity) {
    EXPECT_TRUE(m_matrix_derivation_check(8).passed);
    EXPECT_TRUE(trig_integral_oracle_check(6).passed);
    EXPECT_TRUE(integral_recurrence_check(20, 20).passed);
    EXPECT_TRUE(partition_of_unity_check(30).passed);
}
