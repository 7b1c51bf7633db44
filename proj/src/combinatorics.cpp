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

#include "trignum/combinatorics.hpp"

#include <string>

#include "trignum/errors.hpp"

namespace trignum {

Integer binomial(const Integer& n, long k) {
    if (k < 0) throw NegativeK("binomial with k = " + std::to_string(k));
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer binomial(long n, long k) { return binomial(Integer(n), k); }

Integer binomial0(long n, long k) { return k < 0 ? Integer(0) : binomial(Integer(n), k); }

Integer pyramidal(long i, long j) {
    if (j < 0) return 0;
    return 2 * binomial(i + j, j) - binomial(i + j - 1, j);
}

std::vector<std::vector<Integer>> pyramidal_table(long rows, long cols) {
    std::vector<std::vector<Integer>> t(rows, std::vector<Integer>(cols));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) t[i][j] = pyramidal(i, j);
    return t;
}

Integer catalan(long n) {
    Integer r = binomial(2 * n, n);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return r;
}

Integer central_binomial(long n) { return binomial(2 * n, n); }

std::vector<Integer> catalan_segner(long n) {
    std::vector<Integer> c(n + 1);
    c[0] = 1;
    for (long k = 1; k <= n; ++k)
        for (long j = 0; j < k; ++j) c[k] += c[j] * c[k - 1 - j];
    return c;
}

Rational fuss_catalan(long m, long p, long r) {
    if (m == 0) return 1;
    const long d = m * p + r;
    if (d == 0) throw DegenerateDenominator("F_m(p,r) with mp + r = 0");
    return make_rational(r * binomial(d, m), Integer(d));
}

std::array<std::optional<Rational>, 3> fuss_catalan_forms(long m, long p, long r) {
    std::array<std::optional<Rational>, 3> f;
    if (m * p + r != 0) f[0] = make_rational(r * binomial(m * p + r, m), Integer(m * p + r));
    if (m * (p - 1) + r != 0) f[1] = make_rational(r * binomial(m * p + r - 1, m), Integer(m * (p - 1) + r));
    if (m != 0) f[2] = make_rational(r * binomial(m * p + r - 1, m - 1), Integer(m));
    return f;
}

namespace {

void check_triangle(long i, long j, long lo, const char* which) {
    if (j < lo || i < lo || j > i)
        throw OutOfTriangle(std::string(which) + " Catalan triangle has no entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
}

}  // namespace

Integer catalan_triangle_even(long i, long j) {
    check_triangle(i, j, 1, "even");
    return to_integer_checked(make_rational(j * binomial(2 * i, i - j), Integer(i)));
}

Integer catalan_triangle_odd(long i, long j) {
    check_triangle(i, j, 0, "odd");
    return to_integer_checked(make_rational((2 * j + 1) * binomial(2 * i + 1, i - j), Integer(2 * i + 1)));
}

IntMatrix catalan_even_matrix(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = catalan_triangle_even(i + 1, j + 1);
    return m;
}

IntMatrix catalan_odd_matrix(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = catalan_triangle_odd(i, j);
    return m;
}

namespace {

// Prime factorization by trial division; d stays small here.
std::vector<std::pair<long, int>> factorize(long d) {
    if (d < 1) throw std::invalid_argument("arithmetic function of " + std::to_string(d));
    std::vector<std::pair<long, int>> f;
    for (long q = 2; q * q <= d; ++q) {
        if (d % q) continue;
        int e = 0;
        while (d % q == 0) {
            d /= q;
            ++e;
        }
        f.emplace_back(q, e);
    }
    if (d > 1) f.emplace_back(d, 1);
    return f;
}

}  // namespace

long totient(long d) {
    long t = d;
    for (const auto& [q, e] : factorize(d)) t = t / q * (q - 1);
    return t;
}

int moebius(long d) {
    int m = 1;
    for (const auto& [q, e] : factorize(d)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

long a014963(long d) {
    auto f = factorize(d);
    return f.size() == 1 ? f[0].first : 1;
}

bool is_prime(long n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

std::vector<long> divisors(long n) {
    std::vector<long> lo, hi;
    for (long q = 1; q * q <= n; ++q) {
        if (n % q) continue;
        lo.push_back(q);
        if (q != n / q) hi.push_back(n / q);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

}  // namespace trignum
