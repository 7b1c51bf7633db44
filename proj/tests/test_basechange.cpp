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

#include "trignum/basechange.hpp"
#include "trignum/combinatorics.hpp"

using namespace trignum;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST(PowerReduce, SmallCases) {
    EXPECT_EQ(power_reduce(PowerKind::CosEven, 1), rats({1, 1}));
    EXPECT_EQ(power_reduce(PowerKind::CosEven, 2), rats({3, 4, 1}));
    EXPECT_EQ(power_reduce(PowerKind::CosOdd, 1), rats({3, 1}));
    EXPECT_EQ(power_reduce(PowerKind::SinEven, 1), rats({1, -1}));
    EXPECT_EQ(power_reduce(PowerKind::SinOdd, 1), rats({3, -1}));
}

TEST(PowerReduce, NumericOracle) {
    for (long n = 1; n <= 8; ++n)
        for (double th : {0.2, 0.9, 2.2}) {
            const auto ce = power_reduce(PowerKind::CosEven, n);
            double v = 0;
            for (std::size_t k = 0; k < ce.size(); ++k) v += ce[k].get_d() * (k ? std::cos(2.0 * k * th) : 1.0);
            EXPECT_NEAR(v, std::pow(2.0, 2 * n - 1) * std::pow(std::cos(th), 2 * n), 1e-6);
            const auto so = power_reduce(PowerKind::SinOdd, n);
            v = 0;
            for (std::size_t k = 0; k < so.size(); ++k) v += so[k].get_d() * std::sin((2.0 * k + 1) * th);
            EXPECT_NEAR(v, std::pow(2.0, 2 * n) * std::pow(std::sin(th), 2 * n + 1), 1e-6);
        }
}

TEST(PowerReduce, LaurentChecks) {
    for (PowerKind k : {PowerKind::CosEven, PowerKind::CosOdd, PowerKind::SinEven, PowerKind::SinOdd})
        for (long n = 1; n <= 25; ++n) EXPECT_TRUE(power_reduce_check(k, n).passed) << n;
}

TEST(LaurentExpand, BasisElements) {
    EXPECT_TRUE(laurent_expand_real(TrigBasis::KappaMultiple, 3) ==
                RatLaurent::monomial(1, 3) + RatLaurent::monomial(1, -3));
    EXPECT_TRUE(laurent_expand_real(TrigBasis::Nu, 4) == RatLaurent::monomial(1, 4) + RatLaurent::monomial(1, 2) +
                                                             RatLaurent(1) + RatLaurent::monomial(1, -2) +
                                                             RatLaurent::monomial(1, -4));
    EXPECT_TRUE(laurent_expand_real(TrigBasis::SigmaPower, 2) ==
                RatLaurent(2) - RatLaurent::monomial(1, 2) - RatLaurent::monomial(1, -2));
    EXPECT_THROW(laurent_expand_real(TrigBasis::SigmaPower, 1), std::domain_error);
}

TEST(CosPowerToNu, CatalanTriangleCoefficients) {
    for (long n = 1; n <= 12; ++n) {
        EXPECT_TRUE(cos_power_to_nu_check(true, n).passed) << n;
        EXPECT_TRUE(cos_power_to_nu_check(false, n).passed) << n;
    }
    // kappa^2 = nu_0 + nu_2 and kappa^3 = 2 nu_1 + nu_3
    EXPECT_EQ(cos_power_to_nu(true, 1), (std::vector<Integer>{1, 1}));
    EXPECT_EQ(cos_power_to_nu(false, 2), (std::vector<Integer>{2, 1}));
}

TEST(Transitions, Inv2NumericOracle) {
    const IntMatrix m = transition_matrix(Transition::Inv2, 10);
    for (double th : {0.4, 1.3}) {
        for (std::size_t j = 0; j < 10; ++j) {
            double v = 0;
            for (std::size_t i = 0; i <= j; ++i) v += m(i, j).get_d() * (i ? 2 * std::cos(2.0 * i * th) : 1.0);
            EXPECT_NEAR(v, std::pow(2 * std::cos(th), 2.0 * j), 1e-6 * std::pow(4.0, j));
        }
    }
}

TEST(Transitions, EntryFormulas) {
    const IntMatrix inv2 = transition_matrix(Transition::Inv2, 8), inv4 = transition_matrix(Transition::Inv4, 8);
    for (long i = 0; i < 8; ++i)
        for (long j = i; j < 8; ++j) {
            EXPECT_EQ(inv2(i, j), binomial(2 * j, j - i));
            EXPECT_EQ(inv4(i, j), binomial(2 * j + 1, j - i));
        }
}

TEST(Transitions, LaurentColumnsAndInverses) {
    for (Transition t : {Transition::Inv1, Transition::Inv2, Transition::Inv3, Transition::Inv4, Transition::PyrCat1,
                         Transition::PyrCat2, Transition::PyrCat3, Transition::PyrCat4})
        EXPECT_TRUE(transition_laurent_check(t, 15).passed) << to_string(t);
    for (TransitionPair p :
         {TransitionPair::Inv12, TransitionPair::Inv34, TransitionPair::PyrCat12, TransitionPair::PyrCat34})
        EXPECT_TRUE(verify_mutual_inverse(p, 30).passed);
    EXPECT_TRUE(pyrcat_transpose_check(30).passed);
    EXPECT_FALSE(verify_mutual_inverse(TransitionPair::Inv12, 6, Mutation::at(2)).passed);
}

TEST(Transitions, OrthogonalityAndClosedSeries) {
    EXPECT_TRUE(orthogonality_check(20).passed);
    EXPECT_TRUE(closed_series_checks(20).passed);
    const CheckReport bad = closed_series_checks(20, Mutation::at(1));
    EXPECT_FALSE(bad.passed);
    EXPECT_NE(bad.counterexample.find("x^1"), std::string::npos) << bad.counterexample;
}
