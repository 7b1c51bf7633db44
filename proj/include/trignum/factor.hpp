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

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "trignum/check.hpp"
#include "trignum/poly.hpp"
#include "trignum/quadint.hpp"

namespace trignum {

/// Phi_d for d <= max_n with prod_{d|n} Phi_d = Z_n, and psi_d (d >= 3)
/// with psi_d^2 = Phi_d, psi_d(0) > 0.
struct FactorTable {
    long max_n = 0;
    std::map<long, IntPoly> phi;
    std::map<long, IntPoly> psi;
};

/// Phi_1 = x, Phi_n = Z_n / prod_{d|n, d<n} Phi_d. ConjectureViolation(n,
/// "not divisible") if a quotient is inexact. psi is left empty.
FactorTable build_factor_table(long max_n);
/// Fills table.psi for d >= 3. ConjectureViolation(d, "not a perfect square")
/// or (d, "psi(0) = 0").
void extract_psi(FactorTable& table);
/// build_factor_table followed by extract_psi.
FactorTable factor_table(long max_n);

struct BatteryReport {
    std::vector<CheckReport> checks;
    /// Facts that are computed and shown but not asserted.
    std::vector<std::string> notes;
    bool passed() const { return all_passed(checks); }
};

/// Degree, constant term (against A014963 and against the Moebius product),
/// prime sign psi_p(1), the reflection Phi_2p(x) = Phi_p(4-x), reconstruction
/// and the divisor-sum of degrees. The 2-x reflection form is only reported.
BatteryReport run_conjecture_battery(const FactorTable& table, unsigned jobs = 0);

/// prod_{e|d} (d/e)^{mu(e)}, exactly.
Rational moebius_product(long d);

struct FixedPointItem {
    std::string statement;
    long modulus = 1;
    std::vector<long> predicted;  // residues for which equality is claimed
    std::vector<long> holds;      // holds[r]: n <= max_n, n = r mod modulus, equality holds
    std::vector<long> total;      // total[r]: n <= max_n, n = r mod modulus
    long first_violation = 0;     // 0 when none
};

struct FixedPointReport {
    long max_n = 0;
    std::array<FixedPointItem, 4> items;
    bool passed() const;
    /// Throws ConjectureViolation(n, statement) for the first violated item.
    void require() const;
};

/// Z_n(2) = 2 iff n odd; Z_n(3) = 3 iff n = 1,2 mod 3; Z_n(2+phi) = 2+phi iff
/// n = 1,4 mod 5; Z_n(2+phi) = 3-phi iff n = 2,3 mod 5. Exact evaluation of
/// the streamed Z_n polynomials, cross-checked against the scalar recursion.
FixedPointReport golden_fixed_points(long max_n);

/// psi_d coefficients (absolute values, from the leading one down) next to
/// the column of the pyramidal array labelled L = phi(d) - mu(d), read from
/// its bottom entry 1 upward. Exploratory; nothing is asserted.
struct ColumnAlignment {
    long d = 0;
    long label = 0;
    std::vector<Integer> psi_abs;
    std::vector<Integer> column;
    std::vector<bool> match;  // per position present in both
};
std::vector<ColumnAlignment> pyramidal_column_alignment(const FactorTable& table);
std::string pyramidal_column_report(const FactorTable& table);

}  // namespace trignum
