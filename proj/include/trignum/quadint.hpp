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

#include <ostream>
#include <string>

#include "trignum/integer.hpp"

namespace trignum {

/// a + b*phi in Z[phi], phi^2 = phi + 1.
class QuadInt {
   public:
    QuadInt() = default;
    QuadInt(const Integer& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadInt(long a) : a_(a) {}            // NOLINT(google-explicit-constructor)
    QuadInt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadInt phi() { return {Integer(0), Integer(1)}; }

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }

    /// Galois conjugate, phi -> 1 - phi.
    QuadInt conj() const { return {Integer(a_ + b_), Integer(-b_)}; }
    /// a^2 + ab - b^2
    Integer norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

    QuadInt& operator+=(const QuadInt& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadInt& operator-=(const QuadInt& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadInt& operator*=(const QuadInt& o) {
        Integer bd = b_ * o.b_;
        Integer a = a_ * o.a_ + bd;
        Integer b = a_ * o.b_ + b_ * o.a_ + bd;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadInt operator-() const { return {Integer(-a_), Integer(-b_)}; }

    friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
    friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
    friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }
    friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

   private:
    Integer a_{0};
    Integer b_{0};
};

std::string to_string(const QuadInt& q);
std::ostream& operator<<(std::ostream& os, const QuadInt& q);

}  // namespace trignum
