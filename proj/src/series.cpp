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

#include "trignum/series.hpp"

#include <algorithm>
#include <sstream>

#include "trignum/errors.hpp"

namespace trignum {

TruncSeries::TruncSeries(std::size_t order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1, Rational(0));
}

TruncSeries TruncSeries::one(std::size_t order) {
    TruncSeries s(order);
    s.c_[0] = 1;
    return s;
}

TruncSeries TruncSeries::x(std::size_t order) {
    TruncSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

TruncSeries TruncSeries::from_poly(const RatPoly& p, std::size_t order) {
    TruncSeries s(order);
    for (std::size_t k = 0; k < p.size() && k <= order; ++k) s.c_[k] = p.coeffs()[k];
    return s;
}

TruncSeries TruncSeries::from_poly(const IntPoly& p, std::size_t order) {
    TruncSeries s(order);
    for (std::size_t k = 0; k < p.size() && k <= order; ++k) s.c_[k] = p.coeffs()[k];
    return s;
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw OrderMismatch("cannot extend a series beyond its known order");
    return TruncSeries(order, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

TruncSeries TruncSeries::divided_by_x() const {
    if (sgn(c_[0]) != 0) throw InnerConstantNonzero("divided_by_x needs a zero constant term");
    if (order() == 0) throw OrderMismatch("divided_by_x of an order-0 series");
    return TruncSeries(order() - 1, std::vector<Rational>(c_.begin() + 1, c_.end()));
}

TruncSeries TruncSeries::times_x() const {
    std::vector<Rational> cs(c_.size(), Rational(0));
    for (std::size_t k = 1; k < c_.size(); ++k) cs[k] = c_[k - 1];
    return TruncSeries(order(), std::move(cs));
}

TruncSeries TruncSeries::rescaled(const Rational& s) const {
    TruncSeries r = *this;
    Rational f(1);
    for (auto& c : r.c_) {
        c *= f;
        f *= s;
    }
    return r;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries mul_inverse(const TruncSeries& s) {
    if (sgn(s[0]) == 0) throw ConstantTermZero("multiplicative inverse needs a nonzero constant term");
    const std::size_t n = s.order();
    std::vector<Rational> r(n + 1);
    const Rational inv0 = 1 / s[0];
    r[0] = inv0;
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += s[j] * r[k - j];
        r[k] = -acc * inv0;
    }
    return TruncSeries(n, std::move(r));
}

TruncSeries compose(const TruncSeries& outer, const TruncSeries& inner) {
    if (sgn(inner[0]) != 0) throw InnerConstantNonzero("composition needs an inner series without constant term");
    const std::size_t n = std::min(outer.order(), inner.order());
    const TruncSeries in = inner.truncated(n);
    TruncSeries acc(n);
    for (std::size_t k = n + 1; k-- > 0;) {
        acc = acc * in;
        acc.set(0, acc[0] + outer[k]);
    }
    return acc;
}

TruncSeries pow(const TruncSeries& s, long k) {
    TruncSeries base = k < 0 ? mul_inverse(s) : s;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    TruncSeries r = TruncSeries::one(s.order());
    while (e) {
        if (e & 1ul) r = r * base;
        e >>= 1ul;
        if (e) base = base * base;
    }
    return r;
}

std::string to_string(const TruncSeries& s, const std::string& var) {
    std::vector<Rational> cs = s.coeffs();
    std::ostringstream os;
    os << to_string(RatPoly(std::move(cs)), var) << " + O(" << var << '^' << s.order() + 1 << ')';
    return os.str();
}

long first_difference(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= n; ++k)
        if (a[k] != b[k]) return static_cast<long>(k);
    return -1;
}

}  // namespace trignum
