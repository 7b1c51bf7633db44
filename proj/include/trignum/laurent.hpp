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

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "trignum/integer.hpp"

namespace trignum {

/// Finitely supported map Z -> R, read as sum_k c_k z^k. Zero coefficients
/// are never stored.
template <class R>
class LaurentPoly {
   public:
    using map_type = std::map<long, R>;

    LaurentPoly() = default;
    explicit LaurentPoly(const R& constant) { add(0, constant); }

    static LaurentPoly monomial(const R& c, long k) {
        LaurentPoly p;
        p.add(k, c);
        return p;
    }
    /// z^k + z^-k (k = 0 gives 2).
    static LaurentPoly kappa_multiple(long k) {
        LaurentPoly p;
        p.add(k, R(1));
        p.add(-k, R(1));
        return p;
    }

    const map_type& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }

    R coeff(long k) const {
        auto it = t_.find(k);
        return it == t_.end() ? R(0) : it->second;
    }
    R constant_term() const { return coeff(0); }

    long max_exponent() const { return t_.empty() ? 0 : t_.rbegin()->first; }
    long min_exponent() const { return t_.empty() ? 0 : t_.begin()->first; }

    void add(long k, const R& c) {
        if (trignum::is_zero(c)) return;
        auto [it, inserted] = t_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (trignum::is_zero(it->second)) t_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    LaurentPoly& operator*=(const R& s) {
        if (trignum::is_zero(s)) {
            t_.clear();
            return *this;
        }
        for (auto& kv : t_) kv.second *= s;
        return *this;
    }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& kv : r.t_) kv.second = -kv.second;
        return r;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const R& s) { return a *= s; }
    friend LaurentPoly operator*(const R& s, LaurentPoly a) { return a *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [i, ci] : a.t_)
            for (const auto& [j, cj] : b.t_) r.add(i + j, ci * cj);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }

    /// z -> 1/z
    LaurentPoly inverted() const {
        LaurentPoly r;
        for (const auto& [k, c] : t_) r.t_.emplace(-k, c);
        return r;
    }

   private:
    map_type t_;
};

template <class R>
LaurentPoly<R> pow(const LaurentPoly<R>& p, unsigned k) {
    LaurentPoly<R> r(R(1)), b = p;
    while (k) {
        if (k & 1u) r = r * b;
        k >>= 1u;
        if (k) b = b * b;
    }
    return r;
}

template <class R>
R laurent_constant_term(const LaurentPoly<R>& p) {
    return p.constant_term();
}

/// Constant term of a*b without forming the product.
template <class R>
R constant_term_of_product(const LaurentPoly<R>& a, const LaurentPoly<R>& b) {
    R acc(0);
    for (const auto& [k, c] : a.terms()) {
        auto it = b.terms().find(-k);
        if (it != b.terms().end()) acc += c * it->second;
    }
    return acc;
}

/// Lowest exponent at which a and b differ; sets *found to false when equal.
template <class R>
long first_difference(const LaurentPoly<R>& a, const LaurentPoly<R>& b, bool* found) {
    LaurentPoly<R> d = a - b;
    *found = !d.is_zero();
    return d.min_exponent();
}

template <class R>
std::string to_string(const LaurentPoly<R>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << '(' << to_string(it->second) << ")z^" << it->first;
    }
    return os.str();
}

using RatLaurent = LaurentPoly<Rational>;
using GaussLaurent = LaurentPoly<GaussianRational>;

}  // namespace trignum
