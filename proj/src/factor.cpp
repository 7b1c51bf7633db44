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

#include "trignum/factor.hpp"

#include <sstream>

#include "trignum/combinatorics.hpp"
#include "trignum/errors.hpp"
#include "trignum/parallel.hpp"
#include "trignum/spread.hpp"

namespace trignum {

namespace {

IntPoly proper_divisor_product(const FactorTable& t, long n) {
    IntPoly prod{1};
    for (long d : divisors(n))
        if (d < n) prod = prod * t.phi.at(d);
    return prod;
}

IntPoly reflect4(const IntPoly& p) { return compose(p, IntPoly{4, -1}); }
IntPoly reflect2(const IntPoly& p) { return compose(p, IntPoly{2, -1}); }

std::string dstr(long d) { return "d=" + std::to_string(d); }

}  // namespace

FactorTable build_factor_table(long max_n) {
    if (max_n < 1) throw std::invalid_argument("build_factor_table needs max_n >= 1");
    FactorTable t;
    t.max_n = max_n;
    for_each_zpread(max_n, [&](long n, const IntPoly& z) {
        if (n == 1) {
            t.phi[1] = z;
            return;
        }
        try {
            t.phi[n] = exact_div(z, proper_divisor_product(t, n));
        } catch (const NotDivisible&) {
            throw ConjectureViolation(n, "not divisible");
        }
    });
    return t;
}

void extract_psi(FactorTable& table) {
    for (const auto& [d, phi] : table.phi) {
        if (d < 3) continue;
        IntPoly psi;
        try {
            psi = exact_sqrt(phi);
        } catch (const NotASquare&) {
            throw ConjectureViolation(d, "not a perfect square");
        }
        if (psi.coeff(0) == 0) throw ConjectureViolation(d, "psi(0) = 0");
        if (psi.coeff(0) < 0) psi = -psi;
        table.psi[d] = std::move(psi);
    }
}

FactorTable factor_table(long max_n) {
    FactorTable t = build_factor_table(max_n);
    extract_psi(t);
    return t;
}

Rational moebius_product(long d) {
    Rational r = 1;
    for (long e : divisors(d)) {
        const int mu = moebius(e);
        if (mu == 1) r *= d / e;
        if (mu == -1) r /= d / e;
    }
    return r;
}

BatteryReport run_conjecture_battery(const FactorTable& table, unsigned jobs) {
    const long N = table.max_n;
    BatteryReport out;
    CheckReport degree("factor.degree", "deg Phi_d = totient(d)");
    CheckReport square("factor.square", "Phi_d = psi_d^2 with psi_d(0) > 0 for d >= 3");
    CheckReport constant("factor.constant_term", "psi_d(0) = A014963(d)");
    CheckReport product("factor.moebius_product", "psi_d(0) = prod_{e|d} (d/e)^{mu(e)}");
    CheckReport sign("factor.prime_sign", "psi_p(1) = (-1)^{totient(p)/2} for primes p >= 5");
    CheckReport reflection("factor.reflection", "Phi_2p(x) = Phi_p(4-x) for primes 2 < p, 2p <= max_n");
    CheckReport recon("factor.reconstruction", "prod_{d|n} Phi_d = Z_n");
    CheckReport degsum("factor.degree_sum", "sum_{d|n} deg Phi_d = n");

    struct PerD {
        CheckReport degree, square, constant, product, sign, reflection;
        int reflect2 = -1;  // -1 not applicable, 0 fails, 1 holds
    };
    auto per_d = parallel_map<PerD>(static_cast<std::size_t>(N), jobs, [&](std::size_t i) {
        const long d = static_cast<long>(i) + 1;
        PerD r;
        const IntPoly& phi = table.phi.at(d);
        ++r.degree.cases;
        if (phi.degree() != totient(d)) r.degree.fail(dstr(d) + ": degree " + std::to_string(phi.degree()));
        if (d >= 3) {
            auto it = table.psi.find(d);
            ++r.square.cases;
            if (it == table.psi.end()) {
                r.square.fail(dstr(d) + ": psi missing");
                return r;
            }
            const IntPoly& psi = it->second;
            if (!(psi * psi == phi) || psi.coeff(0) <= 0) r.square.fail(dstr(d));
            r.constant.cases += 1;
            if (psi.coeff(0) != a014963(d)) r.constant.fail(dstr(d) + ": psi(0) = " + psi.coeff(0).get_str());
            r.product.cases += 1;
            if (Rational(psi.coeff(0)) != moebius_product(d)) r.product.fail(dstr(d));
            if (d >= 5 && is_prime(d)) {
                ++r.sign.cases;
                if (psi.evaluate(Integer(1)) != sign_pow(totient(d) / 2)) r.sign.fail("p=" + std::to_string(d));
            }
        }
        if (d >= 3 && is_prime(d) && 2 * d <= N) {
            const IntPoly& phi2 = table.phi.at(2 * d);
            ++r.reflection.cases;
            if (!(phi2 == reflect4(phi))) r.reflection.fail("p=" + std::to_string(d));
            r.reflect2 = phi == reflect2(phi2) ? 1 : 0;
        }
        return r;
    });

    std::vector<long> r2_hold, r2_fail;
    for (std::size_t i = 0; i < per_d.size(); ++i) {
        const PerD& r = per_d[i];
        degree.absorb(r.degree);
        square.absorb(r.square);
        constant.absorb(r.constant);
        product.absorb(r.product);
        sign.absorb(r.sign);
        reflection.absorb(r.reflection);
        if (r.reflect2 == 1) r2_hold.push_back(static_cast<long>(i) + 1);
        if (r.reflect2 == 0) r2_fail.push_back(static_cast<long>(i) + 1);
    }

    for_each_zpread(N, [&](long n, const IntPoly& z) {
        IntPoly prod = proper_divisor_product(table, n) * table.phi.at(n);
        ++recon.cases;
        if (!(prod == z)) recon.fail("n=" + std::to_string(n));
        long s = 0;
        for (long d : divisors(n)) s += table.phi.at(d).degree();
        ++degsum.cases;
        if (s != n) degsum.fail("n=" + std::to_string(n));
    });

    out.checks = {degree, square, constant, product, sign, reflection, recon, degsum};

    auto list = [](const std::vector<long>& v) {
        std::string s;
        for (long p : v) s += (s.empty() ? "" : ",") + std::to_string(p);
        return s.empty() ? std::string("none") : s;
    };
    out.notes.push_back("reflection Phi_p(x) = Phi_2p(2-x) (reported only): holds for p in {" + list(r2_hold) +
                        "}, fails for p in {" + list(r2_fail) + "}");
    out.notes.push_back("irreducibility of psi_d: not tested");
    return out;
}

bool FixedPointReport::passed() const {
    for (const auto& it : items)
        if (it.first_violation != 0) return false;
    return true;
}

void FixedPointReport::require() const {
    for (const auto& it : items)
        if (it.first_violation != 0) throw ConjectureViolation(it.first_violation, it.statement);
}

FixedPointReport golden_fixed_points(long max_n) {
    FixedPointReport rep;
    rep.max_n = max_n;
    rep.items[0] = {"Z_n(2) = 2 iff n = 1 mod 2", 2, {1}, {}, {}, 0};
    rep.items[1] = {"Z_n(3) = 3 iff n = 1,2 mod 3", 3, {1, 2}, {}, {}, 0};
    rep.items[2] = {"Z_n(2+phi) = 2+phi iff n = 1,4 mod 5", 5, {1, 4}, {}, {}, 0};
    rep.items[3] = {"Z_n(2+phi) = 3-phi iff n = 2,3 mod 5", 5, {2, 3}, {}, {}, 0};
    for (auto& it : rep.items) {
        it.holds.assign(static_cast<std::size_t>(it.modulus), 0);
        it.total.assign(static_cast<std::size_t>(it.modulus), 0);
    }

    const QuadInt g{Integer(2), Integer(1)};
    const QuadInt g_conj_shift{Integer(3), Integer(-1)};
    // Scalar recursion Z_n(a) = (2-a) Z_{n-1}(a) - Z_{n-2}(a) + 2a as a second route.
    Integer r2_prev = 0, r2 = 2, r3_prev = 0, r3 = 3;
    QuadInt rg_prev{0}, rg = g;

    auto record = [](FixedPointItem& it, long n, bool eq) {
        const auto r = static_cast<std::size_t>(n % it.modulus);
        ++it.total[r];
        if (eq) ++it.holds[r];
        bool predicted = false;
        for (long p : it.predicted) predicted = predicted || p == static_cast<long>(r);
        if (eq != predicted && it.first_violation == 0) it.first_violation = n;
    };

    for_each_zpread(max_n, [&](long n, const IntPoly& z) {
        if (n >= 2) {
            Integer t2 = Integer(2 - 2) * r2 - r2_prev + 4;
            r2_prev = r2;
            r2 = t2;
            Integer t3 = Integer(2 - 3) * r3 - r3_prev + 6;
            r3_prev = r3;
            r3 = t3;
            QuadInt tg = (QuadInt(2) - g) * rg - rg_prev + QuadInt(2) * g;
            rg_prev = rg;
            rg = tg;
        }
        const Integer v2 = z.evaluate(Integer(2));
        const Integer v3 = z.evaluate(Integer(3));
        const QuadInt vg = z.evaluate(g);
        if (v2 != r2 || v3 != r3 || !(vg == rg))
            throw CheckFailed("Horner and scalar recursion disagree at n=" + std::to_string(n));
        record(rep.items[0], n, v2 == 2);
        record(rep.items[1], n, v3 == 3);
        record(rep.items[2], n, vg == g);
        record(rep.items[3], n, vg == g_conj_shift);
    });
    return rep;
}

std::vector<ColumnAlignment> pyramidal_column_alignment(const FactorTable& table) {
    std::vector<ColumnAlignment> out;
    for (const auto& [d, psi] : table.psi) {
        ColumnAlignment a;
        a.d = d;
        a.label = totient(d) - moebius(d);
        const auto& cs = psi.coeffs();
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) a.psi_abs.push_back(abs(*it));
        const long c = a.label - 2;
        for (long k = 0; c - 2 * k >= 0; ++k) a.column.push_back(pyramidal(c + 2 - 2 * k, k));
        const std::size_t m = std::min(a.psi_abs.size(), a.column.size());
        for (std::size_t i = 0; i < m; ++i) a.match.push_back(a.psi_abs[i] == a.column[i]);
        out.push_back(std::move(a));
    }
    return out;
}

std::string pyramidal_column_report(const FactorTable& table) {
    std::ostringstream os;
    for (const auto& a : pyramidal_column_alignment(table)) {
        os << "d=" << a.d << " column " << a.label << "\n  |psi|:";
        for (const auto& v : a.psi_abs) os << ' ' << v;
        os << "\n  column:";
        for (const auto& v : a.column) os << ' ' << v;
        os << "\n  match: ";
        std::size_t hits = 0;
        for (bool b : a.match) {
            os << (b ? '=' : 'x');
            hits += b ? 1 : 0;
        }
        os << " (" << hits << "/" << a.psi_abs.size() << ")\n";
    }
    return os.str();
}

}  // namespace trignum
