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

#include "trignum/integer.hpp"
#include "trignum/poly.hpp"

namespace trignum {

/// Formal power series over Q known through x^order. Binary operations on
/// series of different orders truncate to the smaller order; nothing is ever
/// claimed beyond it.
class TruncSeries {
   public:
    /// The zero series of the given order.
    explicit TruncSeries(std::size_t order) : c_(order + 1, Rational(0)) {}
    TruncSeries(std::size_t order, std::vector<Rational> coeffs);

    static TruncSeries one(std::size_t order);
    static TruncSeries x(std::size_t order);
    static TruncSeries from_poly(const RatPoly& p, std::size_t order);
    static TruncSeries from_poly(const IntPoly& p, std::size_t order);

    std::size_t order() const noexcept { return c_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return c_.at(k); }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    void set(std::size_t k, const Rational& v) { c_.at(k) = v; }

    TruncSeries truncated(std::size_t order) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& s);
    TruncSeries operator-() const;

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
    friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    /// f/x for f with zero constant term; the order drops by one.
    TruncSeries divided_by_x() const;
    /// f*x; the order is kept, so the top coefficient is lost.
    TruncSeries times_x() const;
    /// f(s*x)
    TruncSeries rescaled(const Rational& s) const;

   private:
    std::vector<Rational> c_;
};

TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
/// 1/s; ConstantTermZero when s(0) = 0.
TruncSeries mul_inverse(const TruncSeries& s);
/// outer(inner(x)); InnerConstantNonzero when inner(0) != 0.
TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner);
/// s^k for any integer k (negative powers need s(0) != 0).
TruncSeries pow(const TruncSeries& s, long k);

std::string to_string(const TruncSeries& s, const std::string& var = "x");

/// Index of the first differing coefficient within the common order, or -1.
long first_difference(const TruncSeries& a, const TruncSeries& b);

}  // namespace trignum
