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

#include <cstddef>
#include <string>
#include <vector>

namespace trignum {

/// Outcome of one verification. A failing report keeps only the first
/// counterexample it saw.
struct CheckReport {
    std::string name;       // short identifier, e.g. "chebyshev.gf"
    std::string statement;  // the identity being checked, in words
    bool passed = true;
    std::string counterexample;
    std::size_t cases = 0;  // number of elementary comparisons made

    CheckReport() = default;
    CheckReport(std::string n, std::string s) : name(std::move(n)), statement(std::move(s)) {}

    void fail(const std::string& where) {
        if (passed) counterexample = where;
        passed = false;
    }
    /// Folds another report into this one (first failure wins).
    void absorb(const CheckReport& other) {
        cases += other.cases;
        if (!other.passed) fail(other.name + ": " + other.counterexample);
    }
    /// Throws CheckFailed if the report failed; returns *this otherwise.
    const CheckReport& require() const;
};

/// Negative-control hook: when active, a check corrupts one coefficient of
/// its own input data (which one is documented per check) before comparing.
struct Mutation {
    bool active = false;
    long index = 0;

    static Mutation at(long i) { return Mutation{true, i}; }
};

std::string summary_line(const CheckReport& r);
bool all_passed(const std::vector<CheckReport>& rs);

}  // namespace trignum
