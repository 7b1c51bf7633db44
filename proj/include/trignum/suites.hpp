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

#include <optional>
#include <string>
#include <vector>

#include "trignum/check.hpp"

namespace trignum {

enum class Suite { Chebyshev, Riordan, BaseChange, Fourier, Spread, All };

std::string to_string(Suite s);
std::optional<Suite> suite_from_string(const std::string& s);

struct SuiteOptions {
    /// Corrupts one coefficient in one check of each suite: T_{min(N,5)} in
    /// the Chebyshev generating function, C_3 in the Riordan inversions, an
    /// inv2 entry in the base-change pairs, M_{11} in the LU check and
    /// S_{min(N,4)} in the bivariate spread generating function.
    bool inject_fault = false;
    unsigned jobs = 0;  // 0: hardware concurrency
};

/// Runs every check of the suite at order/size `order`. Reports come back in
/// a fixed order regardless of scheduling.
std::vector<CheckReport> run_suite(Suite suite, long order, const SuiteOptions& opts = {});

}  // namespace trignum
