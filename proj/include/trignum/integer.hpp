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

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace trignum {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with positive denominator. Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

Integer pow2(unsigned long e);
Integer ipow(const Integer& base, unsigned long e);

bool is_integer(const Rational& q);
/// Numerator of q; throws NonIntegerCoefficient if q is not integral.
Integer to_integer_checked(const Rational& q);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// (-1)^k
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Element re + im*i of Q(i). Arithmetic is exact; every operation leaves
/// both parts canonical.
class GaussianRational {
   public:
    GaussianRational() = default;
    GaussianRational(const Rational& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(const Integer& re) : re_(re) {}   // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(re) {}             // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {Rational(-re_), Rational(-im_)}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

   private:
    Rational re_{0};
    Rational im_{0};
};

std::string to_string(const GaussianRational& g);
std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }

}  // namespace trignum
