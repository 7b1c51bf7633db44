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
#include "trignum/errors.hpp"
#include "trignum/spread.hpp"

using namespace trignum;

TEST(Spread, SmallPolynomials) {
    EXPECT_TRUE(spread_poly(0).is_zero());
    EXPECT_TRUE(spread_poly(2) == (IntPoly{0, 4, -4}));
    EXPECT_TRUE(spread_poly(3) == (IntPoly{0, 9, -24, 16}));
    EXPECT_TRUE(zpread_poly(1) == (IntPoly{0, 1}));
    EXPECT_TRUE(zpread_poly(2) == (IntPoly{0, 4, -1}));
    EXPECT_TRUE(zpread_poly(3) == (IntPoly{0, 9, -6, 1}));
    for (long n = 0; n <= 30; ++n) {
        EXPECT_TRUE(spread_poly(n) == spread_via_chebyshev(n)) << n;
        EXPECT_TRUE(zpread_poly(n) == zpread_from_spread(n)) << n;
    }
}

TEST(Spread, NumericMeaning) {
    // S_n(sin^2 t) = sin^2(n t)
    for (long n = 1; n <= 10; ++n)
        for (double th : {0.3, 1.2}) {
            const double s = std::sin(th) * std::sin(th);
            const RatPoly p = to_rational(spread_poly(n));
            double v = 0;
            for (std::size_t k = p.size(); k-- > 0;) v = v * s + p.coeffs()[k].get_d();
            EXPECT_NEAR(v, std::pow(std::sin(n * th), 2), 1e-9);
        }
}

TEST(Spread, PrintedMatrices) {
    // The printed spread matrix has -120 and -410 where S_5, S_6 give -200, -420.
    const auto ds = golden::differences(spread_matrix(7), golden::kS);
    ASSERT_EQ(ds.size(), 2u);
    EXPECT_EQ(ds[0], std::make_pair(std::size_t{1}, std::size_t{4}));
    EXPECT_EQ(ds[1], std::make_pair(std::size_t{1}, std::size_t{5}));
    EXPECT_EQ(spread_poly(5).coeff(2), -200);
    EXPECT_EQ(spread_poly(6).coeff(2), -420);
    EXPECT_TRUE(golden::differences(zpread_matrix(5), golden::kZ).empty());
    EXPECT_TRUE(golden::differences(shuffle_power_matrix(5), golden::kShufflePower).empty());
}

TEST(Spread, Streaming) {
    const auto z = zpread_list(40);
    long seen = 0;
    for_each_zpread(40, [&](long n, const IntPoly& p) {
        EXPECT_TRUE(p == z[n]);
        seen = n;
    });
    EXPECT_EQ(seen, 40);
}

TEST(Spread, Identities) {
    EXPECT_TRUE(zpread_matrix_check(20).passed);
    EXPECT_TRUE(hirschhorn_gf_check(1).passed);
    EXPECT_TRUE(hirschhorn_gf_check(30).passed);
    for (long n = 1; n <= 20; ++n) {
        EXPECT_TRUE(sqsin_reduction_check(n).passed) << n;
        EXPECT_TRUE(cigler_check(n).passed) << n;
    }
    EXPECT_TRUE(shuffle_inverse_check(1).passed);
    EXPECT_TRUE(shuffle_inverse_check(20).passed);
    EXPECT_TRUE(spreadometric_check(15).passed);
    EXPECT_TRUE(spread_consistency_check(60).passed);
    EXPECT_TRUE(zpread_invariants_check(12, 100).passed);
    EXPECT_TRUE(shuffle_laurent_check(20).passed);
}

TEST(Spread, HirschhornNegativeControl) {
    const CheckReport r = hirschhorn_gf_check(10, Mutation::at(4));
    EXPECT_FALSE(r.passed);
    EXPECT_NE(r.counterexample.find("t^4"), std::string::npos) << r.counterexample;
}
