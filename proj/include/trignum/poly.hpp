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

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trignum/integer.hpp"

namespace trignum {

/// Dense univariate polynomial; coeffs()[k] is the coefficient of x^k.
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing and has degree -1.
template <class R>
class Poly {
   public:
    using value_type = R;

    Poly() = default;
    Poly(std::initializer_list<R> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<R> cs) : c_(std::move(cs)) { trim(); }
    explicit Poly(const R& constant) : c_{constant} { trim(); }

    static Poly x() { return Poly({R(0), R(1)}); }
    static Poly monomial(const R& c, std::size_t k) {
        std::vector<R> cs(k + 1, R(0));
        cs[k] = c;
        return Poly(std::move(cs));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<R>& coeffs() const noexcept { return c_; }

    /// Coefficient of x^k; zero beyond the degree.
    R coeff(long k) const { return (k >= 0 && k < static_cast<long>(c_.size())) ? c_[k] : R(0); }
    const R& lead() const { return c_.back(); }

    /// Lowest index with a nonzero coefficient; -1 for the zero polynomial.
    long valuation() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!trignum::is_zero(c_[k])) return static_cast<long>(k);
        return -1;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const R& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const R& s) { return a *= s; }
    friend Poly operator*(const R& s, Poly a) { return a *= s; }

    /// Schoolbook convolution.
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (trignum::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// p * x^k
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<R> cs(k, R(0));
        cs.insert(cs.end(), c_.begin(), c_.end());
        return Poly(std::move(cs));
    }

    /// Horner evaluation in any ring V that can be built from R.
    template <class V>
    V evaluate(const V& at) const {
        V acc{R(0)};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * at;
            acc = acc + V(*it);
        }
        return acc;
    }

    /// p(x) -> p(s*x), scaling coefficient k by s^k.
    Poly rescaled(const R& s) const {
        std::vector<R> cs = c_;
        R f(1);
        for (auto& c : cs) {
            c *= f;
            f *= s;
        }
        return Poly(std::move(cs));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> cs(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) cs[k - 1] = c_[k] * R(static_cast<long>(k));
        return Poly(std::move(cs));
    }

   private:
    void trim() {
        while (!c_.empty() && trignum::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

/// p(q(x)) by Horner's rule over polynomials.
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
    Poly<R> acc;
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * q + Poly<R>(*it);
    return acc;
}

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned k) {
    Poly<R> r(R(1)), b = p;
    while (k) {
        if (k & 1u) r = r * b;
        k >>= 1u;
        if (k) b = b * b;
    }
    return r;
}

RatPoly to_rational(const IntPoly& p);
/// Throws NonIntegerCoefficient if any coefficient is fractional.
IntPoly to_integer_checked(const RatPoly& p);

/// q with p = d * q exactly over Z; NotDivisible otherwise.
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

/// q with q*q = p, normalized so that the lowest nonzero coefficient of q is
/// positive. NotASquare if no such q exists in Z[x].
IntPoly exact_sqrt(const IntPoly& p);

template <class R>
std::string to_string(const Poly<R>& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const R& c = p.coeffs()[k];
        if (trignum::is_zero(c)) continue;
        std::string s = to_string(c);
        bool neg = !s.empty() && s[0] == '-';
        if (neg) s.erase(0, 1);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0)
            os << s;
        else {
            if (s != "1") os << s;
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

}  // namespace trignum
