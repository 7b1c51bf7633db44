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

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace trignum {

/// Worker count used when the caller passes 0.
inline unsigned default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1u : h;
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads, pulling indices from
/// a shared counter. out[i] = fn(i), so results never depend on scheduling.
/// The first exception thrown by any task is rethrown after all workers join.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
    std::vector<T> out(n);
    if (jobs == 0) jobs = default_jobs();
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                bool expected = false;
                if (failed.compare_exchange_strong(expected, true)) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace trignum
