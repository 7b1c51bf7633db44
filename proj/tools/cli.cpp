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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trignum/chebyshev.hpp"
#include "trignum/combinatorics.hpp"
#include "trignum/errors.hpp"
#include "trignum/factor.hpp"
#include "trignum/fourier.hpp"
#include "trignum/oeis.hpp"
#include "trignum/spread.hpp"
#include "trignum/suites.hpp"

namespace trignum {

namespace {

using Table = std::vector<std::vector<Integer>>;

Table to_table(const IntMatrix& m) {
    Table t(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = m(i, j);
    return t;
}

const std::vector<std::string> kObjects = {"T", "U", "P", "V", "S", "Z", "Beven", "Bodd",
                                           "M", "L", "pyramidal", "phi-table"};

Table build_table(const std::string& obj, std::size_t n) {
    if (obj == "T") return to_table(cheb_matrix(ChebKind::T, n));
    if (obj == "U") return to_table(cheb_matrix(ChebKind::U, n));
    if (obj == "P") return to_table(cheb_matrix(ChebKind::P, n));
    if (obj == "V") return to_table(cheb_matrix(ChebKind::V, n));
    if (obj == "S") return to_table(spread_matrix(n));
    if (obj == "Z") return to_table(zpread_matrix(n));
    if (obj == "Beven") return to_table(catalan_even_matrix(n));
    if (obj == "Bodd") return to_table(catalan_odd_matrix(n));
    if (obj == "M") return to_table(super_catalan_matrix(n));
    if (obj == "L") {
        Table t(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                t[i][j] = binomial(2 * static_cast<long>(i), static_cast<long>(i - j));
        return t;
    }
    // pyramidal: rows i = 1..n, columns j = 0..max(n, 8)-1
    const std::size_t cols = std::max<std::size_t>(n, 8);
    Table t(n, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = pyramidal(static_cast<long>(i) + 1, static_cast<long>(j));
    return t;
}

void emit_plain(const Table& t, std::ostream& out) {
    std::size_t w = 1;
    for (const auto& row : t)
        for (const auto& v : row) w = std::max(w, v.get_str().size());
    for (const auto& row : t) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::string cell = row[j] == 0 ? "" : row[j].get_str();
            if (j) line += ' ';
            line += std::string(w - cell.size(), ' ') + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
}

void emit_csv(const Table& t, std::ostream& out) {
    for (const auto& row : t) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j];
        out << '\n';
    }
}

void emit_json(const std::string& obj, const Table& t, std::ostream& out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    nlohmann::json doc = {{"object", obj}, {"rows", std::move(rows)}};
    out << doc.dump() << '\n';
}

nlohmann::json coeff_array(const IntPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

std::string phi_text(long d, const FactorTable& t) {
    auto it = t.psi.find(d);
    if (it != t.psi.end()) return "(" + to_string(it->second) + ")^2";
    return to_string(t.phi.at(d));
}

void emit_phi_table(std::size_t n, const std::string& fmt, std::ostream& out) {
    const FactorTable t = factor_table(static_cast<long>(n));
    if (fmt == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [d, phi] : t.phi) {
            nlohmann::json r = {{"d", d}, {"phi", coeff_array(phi)}};
            auto it = t.psi.find(d);
            if (it != t.psi.end()) r["psi"] = coeff_array(it->second);
            rows.push_back(std::move(r));
        }
        out << nlohmann::json{{"object", "phi-table"}, {"rows", std::move(rows)}}.dump() << '\n';
        return;
    }
    for (const auto& [d, phi] : t.phi) {
        if (fmt == "csv")
            out << d << ",\"" << to_string(phi) << "\",\"" << (t.psi.count(d) ? to_string(t.psi.at(d)) : "") << "\"\n";
        else
            out << "Phi_" << d << " = " << phi_text(d, t) << '\n';
    }
}

int cmd_gen(const std::string& obj, std::size_t n, const std::string& fmt, std::ostream& out) {
    if (obj == "phi-table") {
        emit_phi_table(n, fmt, out);
        return 0;
    }
    const Table t = build_table(obj, n);
    if (fmt == "csv")
        emit_csv(t, out);
    else if (fmt == "json")
        emit_json(obj, t, out);
    else
        emit_plain(t, out);
    return 0;
}

int cmd_verify(Suite suite, long order, unsigned jobs, bool fault, std::ostream& out, std::ostream& err) {
    SuiteOptions opts;
    opts.jobs = jobs;
    opts.inject_fault = fault;
    const auto reports = run_suite(suite, order, opts);
    std::size_t ok = 0;
    for (const auto& r : reports) {
        out << summary_line(r) << '\n';
        if (r.passed)
            ++ok;
        else
            err << "FAILED " << r.name << ": " << r.statement << "; first counterexample: " << r.counterexample << '\n';
    }
    out << ok << "/" << reports.size() << " checks passed\n";
    return ok == reports.size() ? 0 : 1;
}

int cmd_factor(long max_n, bool pyramidal_report, unsigned jobs, std::ostream& out, std::ostream& err) {
    FactorTable t;
    try {
        t = factor_table(max_n);
    } catch (const ConjectureViolation& e) {
        err << e.what() << '\n';
        return 1;
    }
    for (const auto& [d, phi] : t.phi) out << "Phi_" << d << " = " << phi_text(d, t) << '\n';
    if (max_n >= 16) out << "note: psi_16 = " << to_string(t.psi.at(16)) << " (20x^2, not 20x^3)\n";
    const BatteryReport b = run_conjecture_battery(t, jobs);
    for (const auto& r : b.checks) out << summary_line(r) << '\n';
    for (const auto& n : b.notes) out << "note: " << n << '\n';
    if (pyramidal_report) out << pyramidal_column_report(t);
    return b.passed() ? 0 : 1;
}

int cmd_fixed_points(long max_n, std::ostream& out, std::ostream& err) {
    const FixedPointReport rep = golden_fixed_points(max_n);
    for (const auto& it : rep.items) {
        out << (it.first_violation ? "FAIL " : "PASS ") << it.statement << " (n <= " << max_n << ")\n";
        for (long r = 0; r < it.modulus; ++r)
            out << "  n = " << r << " mod " << it.modulus << ": equality in " << it.holds[r] << " of " << it.total[r]
                << '\n';
        if (it.first_violation) err << "violated at n=" << it.first_violation << ": " << it.statement << '\n';
    }
    return rep.passed() ? 0 : 1;
}

int cmd_oeis(const std::string& id, std::size_t terms, bool offline, std::ostream& out, std::ostream& err) {
    FetchOptions opts;
    opts.offline = offline;
    SequenceFixture f;
    try {
        f = fetch_sequence(id, std::numeric_limits<std::size_t>::max(), opts);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    }
    const Registration* reg = find_registration(id);
    const long start = reg ? std::max(f.offset, reg->first_index) : f.offset;
    out << id << " (" << to_string(f.source) << ", offset " << f.offset << "):";
    for (std::size_t i = 0; i < terms && static_cast<std::size_t>(start - f.offset) + i < f.terms.size(); ++i)
        out << ' ' << f.terms[static_cast<std::size_t>(start - f.offset) + i];
    out << '\n';
    if (!reg) {
        out << "no internal generator registered for " << id << '\n';
        return 0;
    }
    const CheckReport r = crosscheck(f, *reg, terms);
    out << summary_line(r) << '\n';
    return r.passed ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tables and identity checks for Chebyshev, Catalan, Riordan and spread polynomials", "trignum"};
    app.require_subcommand(1);

    std::string object, format = "plain";
    std::size_t size = 0;
    auto* gen = app.add_subcommand("gen", "print a coefficient table");
    gen->add_option("object,--object", object, "table to print")->required()->check(CLI::IsMember(kObjects));
    gen->add_option("size,--size", size, "size N")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    gen->add_option("format,--format", format, "plain, csv or json")->check(CLI::IsMember({"plain", "csv", "json"}));

    std::string suite_name;
    long order = 0;
    unsigned jobs = 0;
    bool inject = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite,--suite", suite_name, "chebyshev, riordan, basechange, fourier, spread or all")
        ->required()
        ->check(CLI::IsMember({"chebyshev", "riordan", "basechange", "fourier", "spread", "all"}));
    verify->add_option("order,--order", order, "order or size N")->required()->check(CLI::Range(1L, 100000L));
    verify->add_option("--jobs", jobs, "worker threads (0: all cores)");
    verify->add_flag("--inject-fault", inject, "corrupt one coefficient per suite (negative control)");

    long max_n = 0;
    bool report_pyr = false;
    auto* factor = app.add_subcommand("factor", "factor the zpread polynomials and test the conjectured structure");
    factor->add_option("max-n,--max-n", max_n, "largest n")->required()->check(CLI::Range(1L, 100000L));
    factor->add_flag("--report-pyramidal", report_pyr, "append the pyramidal-column comparison");
    factor->add_option("--jobs", jobs, "worker threads (0: all cores)");

    long fp_max = 0;
    auto* fixed = app.add_subcommand("fixed-points", "check the golden-ratio fixed point pattern");
    fixed->add_option("max-n,--max-n", fp_max, "largest n")->required()->check(CLI::Range(1L, 1000000L));

    std::string id;
    std::size_t terms = 10;
    bool offline = false;
    auto* oeis = app.add_subcommand("oeis", "cross-check a sequence against its OEIS b-file");
    oeis->add_option("id,--id", id, "A-number, e.g. A000108")->required();
    oeis->add_option("--terms", terms, "number of terms to compare")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    oeis->add_flag("--offline", offline, "never touch the network");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        err << "run with --help for usage\n";
        return 2;
    }

    try {
        if (*gen) return cmd_gen(object, size, format, out);
        if (*verify) return cmd_verify(*suite_from_string(suite_name), order, jobs, inject, out, err);
        if (*factor) return cmd_factor(max_n, report_pyr, jobs, out, err);
        if (*fixed) return cmd_fixed_points(fp_max, out, err);
        if (*oeis) {
            if (!is_valid_oeis_id(id)) {
                err << "malformed OEIS id '" << id << "'\n";
                return 2;
            }
            return cmd_oeis(id, terms, offline, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace trignum
