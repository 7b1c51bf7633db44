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

#include "trignum/basechange.hpp"

#include <stdexcept>

#include "trignum/chebyshev.hpp"
#include "trignum/combinatorics.hpp"
#include "trignum/poly_series.hpp"
#include "trignum/riordan.hpp"

namespace trignum {

namespace {

const GaussianRational kI = GaussianRational::i();

GaussLaurent z_pow(long k) { return GaussLaurent::monomial(1, k); }

// sum_{j=0}^m z^{m-2j}
template <class R>
LaurentPoly<R> nu(long m) {
    LaurentPoly<R> p;
    for (long j = 0; j <= m; ++j) p.add(m - 2 * j, R(1));
    return p;
}

RatLaurent to_real(const GaussLaurent& p) {
    RatLaurent r;
    for (const auto& [k, c] : p.terms()) {
        if (!c.is_real()) throw std::domain_error("Laurent representative is not real");
        r.add(k, c.re());
    }
    return r;
}

std::string at(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

GaussLaurent laurent_expand(TrigBasis basis, long k) {
    if (k < 0) throw std::invalid_argument("basis index must be >= 0");
    const GaussLaurent sigma = (z_pow(1) - z_pow(-1)) * (-kI);
    const GaussLaurent shuffle = GaussLaurent(2) - z_pow(2) - z_pow(-2);
    switch (basis) {
        case TrigBasis::KappaMultiple:
            return k == 0 ? GaussLaurent(1) : GaussLaurent::kappa_multiple(k);
        case TrigBasis::Nu:
            return nu<GaussianRational>(k);
        case TrigBasis::KappaPower:
            return pow(GaussLaurent::kappa_multiple(1), static_cast<unsigned>(k));
        case TrigBasis::SigmaPower:
            return pow(sigma, static_cast<unsigned>(k));
        case TrigBasis::SigmaMultiple:
            return (z_pow(k) - z_pow(-k)) * (-kI);
        case TrigBasis::ShuffleMultiple:
            return GaussLaurent(2) - z_pow(2 * k) - z_pow(-2 * k);
        case TrigBasis::ShufflePower:
            return pow(shuffle, static_cast<unsigned>(k));
    }
    throw std::invalid_argument("unknown basis");
}

RatLaurent laurent_expand_real(TrigBasis basis, long k) { return to_real(laurent_expand(basis, k)); }

std::vector<Rational> power_reduce(PowerKind kind, long n) {
    const bool even = kind == PowerKind::CosEven || kind == PowerKind::SinEven;
    const bool sine = kind == PowerKind::SinEven || kind == PowerKind::SinOdd;
    if (n < 0 || (even && n < 1)) throw std::invalid_argument("power_reduce: n out of range");
    const long top = even ? 2 * n : 2 * n + 1;
    std::vector<Rational> a(n + 1);
    for (long k = 0; k <= n; ++k) {
        a[k] = binomial(top, n - k);
        if (sine) a[k] *= sign_pow(k);
    }
    if (even) a[0] /= 2;
    return a;
}

CheckReport power_reduce_check(PowerKind kind, long n) {
    static const char* names[] = {"cos-even", "cos-odd", "sin-even", "sin-odd"};
    CheckReport rep(std::string("basechange.power_reduce.") + names[static_cast<int>(kind)],
                    "power reduction coefficients reproduce the Laurent expansion, n=" + std::to_string(n));
    const std::vector<Rational> a = power_reduce(kind, n);
    const GaussianRational half(Rational(1, 2));
    auto cos_m = [&](long m) { return GaussLaurent::kappa_multiple(m) * half; };
    auto sin_m = [&](long m) { return (z_pow(m) - z_pow(-m)) * (half / kI); };

    GaussLaurent lhs, rhs;
    switch (kind) {
        case PowerKind::CosEven:
        case PowerKind::SinEven: {
            const TrigBasis b = kind == PowerKind::CosEven ? TrigBasis::KappaPower : TrigBasis::SigmaPower;
            lhs = laurent_expand(b, 2 * n) * half;
            rhs = GaussLaurent(GaussianRational(a[0]));
            for (long k = 1; k <= n; ++k) rhs += cos_m(2 * k) * GaussianRational(a[k]);
            break;
        }
        case PowerKind::CosOdd:
            lhs = laurent_expand(TrigBasis::KappaPower, 2 * n + 1) * half;
            for (long k = 0; k <= n; ++k) rhs += cos_m(2 * k + 1) * GaussianRational(a[k]);
            break;
        case PowerKind::SinOdd:
            lhs = laurent_expand(TrigBasis::SigmaPower, 2 * n + 1) * half;
            for (long k = 0; k <= n; ++k) rhs += sin_m(2 * k + 1) * GaussianRational(a[k]);
            break;
    }
    ++rep.cases;
    bool differ = false;
    const long e = first_difference(lhs, rhs, &differ);
    if (differ) rep.fail("n=" + std::to_string(n) + ", first differing monomial z^" + std::to_string(e));
    return rep;
}

std::vector<Integer> cos_power_to_nu(bool even, long n) {
    std::vector<Integer> c;
    if (even) {
        for (long k = 0; k <= n; ++k) c.push_back(catalan_triangle_odd(n, k));
    } else {
        if (n < 1) throw std::invalid_argument("cos_power_to_nu: odd case needs n >= 1");
        for (long k = 1; k <= n; ++k) c.push_back(catalan_triangle_even(n, k));
    }
    return c;
}

CheckReport cos_power_to_nu_check(bool even, long n) {
    CheckReport rep(even ? "basechange.kappa_to_nu.even" : "basechange.kappa_to_nu.odd",
                    "kappa powers expand over nu with Catalan triangle coefficients, n=" + std::to_string(n));
    const std::vector<Integer> c = cos_power_to_nu(even, n);
    const long power = even ? 2 * n : 2 * n - 1;
    RatLaurent rhs;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const long idx = even ? 2 * static_cast<long>(k) : 2 * static_cast<long>(k) + 1;
        rhs += nu<Rational>(idx) * Rational(c[k]);
    }
    ++rep.cases;
    if (!(laurent_expand_real(TrigBasis::KappaPower, power) == rhs)) rep.fail("n=" + std::to_string(n));
    return rep;
}

std::string to_string(Transition t) {
    static const char* names[] = {"inv1", "inv2", "inv3", "inv4", "pyrcat1", "pyrcat2", "pyrcat3", "pyrcat4"};
    return names[static_cast<int>(t)];
}

IntMatrix transition_matrix(Transition which, std::size_t size) {
    IntMatrix m(size, size);
    for (std::size_t jj = 0; jj < size; ++jj)
        for (std::size_t ii = 0; ii <= jj; ++ii) {
            const long i = static_cast<long>(ii), j = static_cast<long>(jj), d = j - i;
            Integer v;
            switch (which) {
                case Transition::Inv1: v = sign_pow(d) * pyramidal(2 * i, d); break;
                case Transition::Inv2: v = binomial(2 * j, d); break;
                case Transition::Inv3: v = sign_pow(d) * pyramidal(2 * i + 1, d); break;
                case Transition::Inv4: v = binomial(2 * j + 1, d); break;
                case Transition::PyrCat1: v = catalan_triangle_odd(j, i); break;
                case Transition::PyrCat2: v = sign_pow(d) * binomial(i + j, d); break;
                case Transition::PyrCat3: v = catalan_triangle_even(j + 1, i + 1); break;
                case Transition::PyrCat4: v = sign_pow(d) * binomial(i + j + 1, d); break;
            }
            m(ii, jj) = std::move(v);
        }
    return m;
}

namespace {

struct Bases {
    TrigBasis row, col;
    long row_step_offset, col_step_offset;  // element index is 2i + offset
};

Bases bases_of(Transition t) {
    switch (t) {
        case Transition::Inv1: return {TrigBasis::KappaPower, TrigBasis::KappaMultiple, 0, 0};
        case Transition::Inv2: return {TrigBasis::KappaMultiple, TrigBasis::KappaPower, 0, 0};
        case Transition::Inv3: return {TrigBasis::KappaPower, TrigBasis::KappaMultiple, 1, 1};
        case Transition::Inv4: return {TrigBasis::KappaMultiple, TrigBasis::KappaPower, 1, 1};
        case Transition::PyrCat1: return {TrigBasis::Nu, TrigBasis::KappaPower, 0, 0};
        case Transition::PyrCat2: return {TrigBasis::KappaPower, TrigBasis::Nu, 0, 0};
        case Transition::PyrCat3: return {TrigBasis::Nu, TrigBasis::KappaPower, 1, 1};
        case Transition::PyrCat4: return {TrigBasis::KappaPower, TrigBasis::Nu, 1, 1};
    }
    throw std::invalid_argument("unknown transition");
}

}  // namespace

CheckReport transition_laurent_check(Transition which, std::size_t size) {
    CheckReport rep("basechange.laurent." + to_string(which),
                    "each column of " + to_string(which) + " expands its element in the source basis");
    const IntMatrix m = transition_matrix(which, size);
    const Bases b = bases_of(which);
    std::vector<RatLaurent> rows;
    for (std::size_t i = 0; i < size; ++i)
        rows.push_back(laurent_expand_real(b.row, 2 * static_cast<long>(i) + b.row_step_offset));
    for (std::size_t j = 0; j < size; ++j) {
        RatLaurent sum;
        for (std::size_t i = 0; i <= j; ++i) sum += rows[i] * Rational(m(i, j));
        ++rep.cases;
        if (!(sum == laurent_expand_real(b.col, 2 * static_cast<long>(j) + b.col_step_offset)))
            rep.fail("column " + std::to_string(j));
    }
    return rep;
}

CheckReport verify_mutual_inverse(TransitionPair pair, std::size_t size, const Mutation& mut) {
    static const Transition firsts[] = {Transition::Inv1, Transition::Inv3, Transition::PyrCat1, Transition::PyrCat3};
    const Transition ta = firsts[static_cast<int>(pair)];
    const auto tb = static_cast<Transition>(static_cast<int>(ta) + 1);
    CheckReport rep("basechange.inverse." + to_string(ta) + "_" + to_string(tb),
                    to_string(ta) + " and " + to_string(tb) + " are mutually inverse at size " + std::to_string(size));
    const IntMatrix a = transition_matrix(ta, size);
    IntMatrix b = transition_matrix(tb, size);
    if (mut.active && size > 0) {
        const std::size_t col = std::min<std::size_t>(static_cast<std::size_t>(std::max(0L, mut.index)), size - 1);
        b(0, col) += 1;
    }
    const IntMatrix id = IntMatrix::identity(size);
    rep.cases += 2;
    if (auto mm = first_mismatch(a * b, id)) rep.fail(to_string(ta) + "*" + to_string(tb) + " entry " + at(mm->first, mm->second));
    if (auto mm = first_mismatch(b * a, id)) rep.fail(to_string(tb) + "*" + to_string(ta) + " entry " + at(mm->first, mm->second));
    return rep;
}

CheckReport pyrcat_transpose_check(std::size_t size) {
    CheckReport rep("basechange.pyrcat_transposes",
                    "pyrcat1^T = B^odd, pyrcat3^T = B^even, pyrcat2^T and pyrcat4^T invert them");
    const IntMatrix bo = catalan_odd_matrix(size);
    const IntMatrix be = catalan_even_matrix(size);
    const IntMatrix id = IntMatrix::identity(size);
    auto expect = [&](const IntMatrix& got, const IntMatrix& want, const char* what) {
        ++rep.cases;
        if (auto mm = first_mismatch(got, want)) rep.fail(std::string(what) + " entry " + at(mm->first, mm->second));
    };
    expect(transition_matrix(Transition::PyrCat1, size).transposed(), bo, "pyrcat1^T vs B^odd");
    expect(transition_matrix(Transition::PyrCat3, size).transposed(), be, "pyrcat3^T vs B^even");
    expect(transition_matrix(Transition::PyrCat2, size).transposed() * bo, id, "pyrcat2^T B^odd");
    expect(transition_matrix(Transition::PyrCat4, size).transposed() * be, id, "pyrcat4^T B^even");

    // The same triangles as Riordan matrices.
    if (size > 0) {
        const std::size_t order = size - 1;
        const TruncSeries C = catalan_series(order);
        const TruncSeries xC2 = TruncSeries::x(order) * C * C;
        const RatMatrix ro = riordan_matrix(RiordanArray(C, xC2), size);
        const RatMatrix re = riordan_matrix(RiordanArray(C * C, xC2), size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) {
                rep.cases += 2;
                if (ro(i, j) != Rational(bo(i, j))) rep.fail("(C,xC^2) vs B^odd entry " + at(i, j));
                if (re(i, j) != Rational(be(i, j))) rep.fail("(C^2,xC^2) vs B^even entry " + at(i, j));
            }
    }
    return rep;
}

CheckReport orthogonality_check(long max) {
    CheckReport rep("basechange.orthogonality", "constant term of kappa(m theta) kappa(n theta) is 2 delta_mn");
    std::vector<RatLaurent> k;
    for (long m = 0; m <= max; ++m) k.push_back(laurent_expand_real(TrigBasis::KappaMultiple, m));
    for (long m = 0; m <= max; ++m)
        for (long n = 0; n <= max; ++n) {
            const Rational want = (m == 0 && n == 0) ? Rational(1) : (m == n ? Rational(2) : Rational(0));
            ++rep.cases;
            if (laurent_constant_term(k[m] * k[n]) != want)
                rep.fail("(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")");
        }
    return rep;
}

CheckReport closed_series_checks(long order, const Mutation& mut) {
    CheckReport rep("basechange.closed_series",
                    "the four closed cosine series hold in Q[c][[x]] after clearing (1+x)^2 - 4xc^2");
    const auto N = static_cast<std::size_t>(order);
    const auto t = chebyshev_t_list(2 * order + 1);
    const auto u = chebyshev_u_list(2 * order + 1);
    const RatPoly c{0, 1};
    for (int item = 1; item <= 4; ++item) {
        const bool flip = mut.active && mut.index == item;
        const RatPoly mid = RatPoly{2} + RatPoly{0, 0, flip ? 4 : -4};
        const PolySeries<Rational> den = {RatPoly{1}, mid, RatPoly{1}};
        PolySeries<Rational> series(N + 1), numer;
        for (std::size_t n = 0; n <= N; ++n) {
            switch (item) {
                case 1: series[n] = n == 0 ? RatPoly{1} : to_rational(t[2 * n]) * Rational(2); break;
                case 2: series[n] = to_rational(t[2 * n + 1]); break;
                case 3: series[n] = to_rational(u[2 * n]); break;
                case 4: series[n] = to_rational(u[2 * n + 1]); break;
            }
        }
        switch (item) {
            case 1: numer = {RatPoly{1}, RatPoly{}, RatPoly{-1}}; break;
            case 2: numer = {c, -c}; break;  // (1-x) c; the factor 2 belongs with kappa = 2c
            case 3: numer = {RatPoly{1}, RatPoly{1}}; break;
            case 4: numer = {c * Rational(2)}; break;
        }
        ++rep.cases;
        const long k = first_difference(mul_truncated(den, series, N), numer, N);
        if (k >= 0) rep.fail("item " + std::to_string(item) + ", coefficient of x^" + std::to_string(k));
    }
    return rep;
}

}  // namespace trignum
