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

#include "trignum/suites.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "trignum/basechange.hpp"
#include "trignum/chebyshev.hpp"
#include "trignum/fourier.hpp"
#include "trignum/parallel.hpp"
#include "trignum/riordan.hpp"
#include "trignum/spread.hpp"

namespace trignum {

std::string to_string(Suite s) {
    switch (s) {
        case Suite::Chebyshev: return "chebyshev";
        case Suite::Riordan: return "riordan";
        case Suite::BaseChange: return "basechange";
        case Suite::Fourier: return "fourier";
        case Suite::Spread: return "spread";
        case Suite::All: return "all";
    }
    return "?";
}

std::optional<Suite> suite_from_string(const std::string& s) {
    for (Suite x : {Suite::Chebyshev, Suite::Riordan, Suite::BaseChange, Suite::Fourier, Suite::Spread, Suite::All})
        if (to_string(x) == s) return x;
    return std::nullopt;
}

namespace {

using Task = std::function<CheckReport()>;

// Tasks sharing a group name are folded into one report after they ran.
struct Job {
    std::string group;  // empty: stands alone
    std::string statement;
    Task task;
};

void per_n(std::vector<Job>& jobs, const std::string& group, const std::string& statement, long from, long to,
           const std::function<CheckReport(long)>& fn) {
    for (long n = from; n <= to; ++n) jobs.push_back({group, statement, [fn, n] { return fn(n); }});
}

void chebyshev_jobs(std::vector<Job>& jobs, long N, bool fault) {
    per_n(jobs, "chebyshev.trig_values", "T_n, U_n at cos and sin arguments as Laurent identities", 0, N,
          verify_trig_values);
    const Mutation mut = fault ? Mutation::at(std::min(N, 5L)) : Mutation{};
    jobs.push_back({"", "", [N, mut] { return gf_check_chebyshev(N, mut); }});
    jobs.push_back({"", "", [N] { return chebyshev_proof_identities(N); }});
    jobs.push_back({"", "", [N] { return closed_form_check(N); }});
    jobs.push_back({"", "", [N] { return parity_and_depowering_check(N); }});
    jobs.push_back({"", "", [N] { return p_matrix_check(N); }});
}

void riordan_jobs(std::vector<Job>& jobs, long N, bool fault) {
    const auto o = static_cast<std::size_t>(N);
    for (long n : {-1L, 0L, 1L, 2L})
        for (long m : {0L, 1L, 2L})
            jobs.push_back({"riordan.binomial_series", "sum_j binom(2j+n, j-m) x^j = B C^n (C-1)^m",
                            [n, m, o] { return binomial_series_identity(n, m, o); }});
    const Mutation mut = fault ? Mutation::at(std::min(N, 3L)) : Mutation{};
    jobs.push_back({"", "", [o, mut] { return riordan_inversions_check(o, mut); }});
    jobs.push_back({"", "", [o] { return product_lemma_check(o); }});
    jobs.push_back({"", "", [o] { return catalan_composition_check(o); }});
    jobs.push_back({"", "", [o] { return zpread_riordan_check(o); }});
    jobs.push_back({"", "", [o] { return riordan_matrix_check(o); }});
}

void basechange_jobs(std::vector<Job>& jobs, long N, bool fault) {
    const auto sz = static_cast<std::size_t>(N);
    for (PowerKind k : {PowerKind::CosEven, PowerKind::CosOdd, PowerKind::SinEven, PowerKind::SinOdd})
        per_n(jobs, "basechange.power_reduce", "power reduction against Laurent expansion", 1, N,
              [k](long n) { return power_reduce_check(k, n); });
    per_n(jobs, "basechange.cos_power_to_nu", "kappa powers in the nu basis via Catalan triangles", 1, N,
          [](long n) {
              CheckReport r = cos_power_to_nu_check(true, n);
              r.absorb(cos_power_to_nu_check(false, n));
              return r;
          });
    for (Transition t : {Transition::Inv1, Transition::Inv2, Transition::Inv3, Transition::Inv4, Transition::PyrCat1,
                         Transition::PyrCat2, Transition::PyrCat3, Transition::PyrCat4})
        jobs.push_back({"basechange.transition_laurent", "transition matrix columns expand their target elements",
                        [t, sz] { return transition_laurent_check(t, sz); }});
    for (TransitionPair p :
         {TransitionPair::Inv12, TransitionPair::Inv34, TransitionPair::PyrCat12, TransitionPair::PyrCat34}) {
        const Mutation mut = fault && p == TransitionPair::Inv12 ? Mutation::at(N > 1 ? 1 : 0) : Mutation{};
        jobs.push_back({"", "", [p, sz, mut] { return verify_mutual_inverse(p, sz, mut); }});
    }
    jobs.push_back({"", "", [sz] { return pyrcat_transpose_check(sz); }});
    jobs.push_back({"", "", [N] { return orthogonality_check(N); }});
    jobs.push_back({"", "", [N] { return closed_series_checks(N); }});
}

void fourier_jobs(std::vector<Job>& jobs, long N, bool fault) {
    const auto sz = static_cast<std::size_t>(N);
    const Mutation mut = fault ? Mutation::at(N > 1 ? 1 : 0) : Mutation{};
    jobs.push_back({"", "", [sz, mut] { return lu_factorization_check(sz, mut); }});
    jobs.push_back({"", "", [sz] { return m_matrix_derivation_check(sz); }});
    jobs.push_back({"", "", [N] { return trig_integral_oracle_check(N); }});
    jobs.push_back({"", "", [N] { return integral_recurrence_check(2 * N, 2 * N); }});
    jobs.push_back({"", "", [N] { return partition_of_unity_check(N); }});
    jobs.push_back({"", "", [N] { return super_catalan_check(N); }});
    per_n(jobs, "fourier.weirdhyp", "2^{2m}/binom(2m,m) = sum_l binom(m-1,l) binom(m,l)/binom(2m-1,2l)", 1, N,
          weirdhyp_check);
}

void spread_jobs(std::vector<Job>& jobs, long N, bool fault) {
    const auto sz = static_cast<std::size_t>(N);
    const Mutation mut = fault ? Mutation::at(std::min(N, 4L)) : Mutation{};
    jobs.push_back({"", "", [N] { return spread_consistency_check(N); }});
    jobs.push_back({"", "", [sz] { return zpread_matrix_check(sz); }});
    jobs.push_back({"", "", [N, mut] { return hirschhorn_gf_check(N, mut); }});
    per_n(jobs, "spread.sqsin_reduction", "2^{2n-2} s^n = sum_k (-1)^{k-1} binom(2n,n-k) S_k(s)", 1, N,
          sqsin_reduction_check);
    jobs.push_back({"", "", [sz] { return shuffle_inverse_check(sz); }});
    jobs.push_back({"", "", [N] { return spreadometric_check(N); }});
    per_n(jobs, "spread.cigler", "S_{2n}(x^2) = (1-x^2) U_{2n-1}^2, S_{2n+1}(x^2) = T_{2n+1}^2, and the Z forms", 1,
          N, cigler_check);
    jobs.push_back({"", "", [N] { return zpread_invariants_check(std::min(N, 12L), N); }});
    jobs.push_back({"", "", [N] { return shuffle_laurent_check(N); }});
}

}  // namespace

std::vector<CheckReport> run_suite(Suite suite, long order, const SuiteOptions& opts) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<Job> jobs;
    const bool f = opts.inject_fault;
    if (suite == Suite::Chebyshev || suite == Suite::All) chebyshev_jobs(jobs, order, f);
    if (suite == Suite::Riordan || suite == Suite::All) riordan_jobs(jobs, order, f);
    if (suite == Suite::BaseChange || suite == Suite::All) basechange_jobs(jobs, order, f);
    if (suite == Suite::Fourier || suite == Suite::All) fourier_jobs(jobs, order, f);
    if (suite == Suite::Spread || suite == Suite::All) spread_jobs(jobs, order, f);

    auto results =
        parallel_map<CheckReport>(jobs.size(), opts.jobs, [&](std::size_t i) { return jobs[i].task(); });

    std::vector<CheckReport> out;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (jobs[i].group.empty()) {
            out.push_back(std::move(results[i]));
            continue;
        }
        if (i == 0 || jobs[i - 1].group != jobs[i].group) out.emplace_back(jobs[i].group, jobs[i].statement);
        CheckReport& agg = out.back();
        agg.cases += results[i].cases;
        if (!results[i].passed) agg.fail(results[i].counterexample);
    }
    return out;
}

}  // namespace trignum
