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

#include "trignum/integer.hpp"

#include <sstream>

#include "trignum/errors.hpp"

namespace trignum {

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer_checked(const Rational& q) {
    if (!is_integer(q)) throw NonIntegerCoefficient("expected an integer, got " + q.get_str());
    return q.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string to_string(const GaussianRational& g) {
    if (g.is_real()) return g.re().get_str();
    std::ostringstream os;
    if (sgn(g.re()) != 0) os << g.re().get_str() << (sgn(g.im()) > 0 ? "+" : "");
    os << g.im().get_str() << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << to_string(g); }

}  // namespace trignum
