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

#include "trignum/check.hpp"

#include "trignum/errors.hpp"

namespace trignum {

const CheckReport& CheckReport::require() const {
    if (!passed) throw CheckFailed(name + ": " + counterexample);
    return *this;
}

std::string summary_line(const CheckReport& r) {
    std::string s = (r.passed ? "PASS " : "FAIL ") + r.name + " [" + std::to_string(r.cases) + " cases] " + r.statement;
    if (!r.passed) s += "\n    first counterexample: " + r.counterexample;
    return s;
}

bool all_passed(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs)
        if (!r.passed) return false;
    return true;
}

}  // namespace trignum
