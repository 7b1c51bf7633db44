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

#include "trignum/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

#include "trignum/combinatorics.hpp"
#include "trignum/errors.hpp"
#include "trignum/fourier.hpp"

#ifndef TRIGNUM_FIXTURE_DIR
#define TRIGNUM_FIXTURE_DIR "data/oeis"
#endif

namespace fs = std::filesystem;

namespace trignum {

std::string to_string(FixtureSource s) {
    switch (s) {
        case FixtureSource::Bundled: return "bundled";
        case FixtureSource::Cached: return "cached";
        case FixtureSource::Network: return "network";
    }
    return "?";
}

bool is_valid_oeis_id(const std::string& id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < 7; ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

SequenceFixture parse_bfile(const std::string& id, const std::string& text) {
    SequenceFixture f;
    f.id = id;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    long expect = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t p = line.find_first_not_of(" \t");
        if (p == std::string::npos || line[p] == '#') continue;
        std::istringstream ls(line);
        std::string idx, val, extra;
        ls >> idx >> val;
        if (val.empty() || (ls >> extra)) throw ParseError(lineno, "expected \"index value\"");
        long n = 0;
        try {
            std::size_t used = 0;
            n = std::stol(idx, &used);
            if (used != idx.size()) throw std::invalid_argument(idx);
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad index '" + idx + "'");
        }
        Integer v;
        if (v.set_str(val, 10) != 0) throw ParseError(lineno, "bad value '" + val + "'");
        if (first) {
            f.offset = n;
            first = false;
        } else if (n != expect) {
            throw ParseError(lineno, "index " + std::to_string(n) + " out of sequence");
        }
        expect = n + 1;
        f.terms.push_back(std::move(v));
    }
    if (f.terms.empty()) throw ParseError(lineno, "no terms");
    return f;
}

std::string format_bfile(const SequenceFixture& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.terms.size(); ++i) os << f.offset + static_cast<long>(i) << ' ' << f.terms[i] << '\n';
    return os.str();
}

std::string default_bundled_dir() { return TRIGNUM_FIXTURE_DIR; }

std::string default_cache_dir() {
    const char* env = std::getenv("TRIGNUM_OEIS_CACHE");
    return env ? std::string(env) : std::string();
}

namespace {

std::optional<std::string> read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_atomic(const fs::path& target, const std::string& body) {
    fs::create_directories(target.parent_path());
    std::random_device rd;
    const fs::path tmp = target.string() + ".tmp." + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary);
        out << body;
        if (!out) throw Error("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, target);
}

SequenceFixture truncated(SequenceFixture f, std::size_t max_terms, FixtureSource src) {
    if (f.terms.size() > max_terms) f.terms.resize(max_terms);
    f.source = src;
    return f;
}

}  // namespace

SequenceFixture fetch_sequence(const std::string& id, std::size_t max_terms, const FetchOptions& opts) {
    if (!is_valid_oeis_id(id)) throw std::invalid_argument("malformed OEIS id '" + id + "'");
    const std::string name = bfile_name(id);

    const fs::path bundled = fs::path(opts.bundled_dir.empty() ? default_bundled_dir() : opts.bundled_dir) / name;
    if (auto text = read_file(bundled)) return truncated(parse_bfile(id, *text), max_terms, FixtureSource::Bundled);

    const std::string cache_dir = opts.cache_dir.empty() ? default_cache_dir() : opts.cache_dir;
    if (!cache_dir.empty())
        if (auto text = read_file(fs::path(cache_dir) / name))
            return truncated(parse_bfile(id, *text), max_terms, FixtureSource::Cached);

    if (opts.offline) throw NotAvailableOffline(id + " is neither bundled nor cached");

    std::unique_ptr<Transport> owned;
    Transport* t = opts.transport;
    if (!t) {
        owned = make_https_transport();
        t = owned.get();
    }
    const std::string body = t->get("oeis.org", "/" + id + "/" + name);
    SequenceFixture f = parse_bfile(id, body);
    if (!cache_dir.empty()) write_atomic(fs::path(cache_dir) / name, body);
    return truncated(std::move(f), max_terms, FixtureSource::Network);
}

SequenceFixture fetch_sequence(const std::string& id, std::size_t max_terms, bool offline) {
    FetchOptions o;
    o.offline = offline;
    return fetch_sequence(id, max_terms, o);
}

const std::vector<Registration>& registry() {
    static const std::vector<Registration> r = {
        {"A005408", "odd numbers, pyramidal row 1", 0, [](long n) { return pyramidal(1, n); }},
        {"A000290", "squares, pyramidal row 2", 1, [](long n) { return pyramidal(2, n - 1); }},
        {"A000330", "square pyramidal numbers, pyramidal row 3", 1, [](long n) { return pyramidal(3, n - 1); }},
        {"A002415", "4-dimensional pyramidal numbers, pyramidal row 4", 2,
         [](long n) { return pyramidal(4, n - 2); }},
        {"A005585", "5-dimensional pyramidal numbers, pyramidal row 5", 1,
         [](long n) { return pyramidal(5, n - 1); }},
        {"A014963", "exp(Lambda(n))", 1, [](long n) { return Integer(a014963(n)); }},
        {"A053139", "totient(n) - moebius(n)", 1, [](long n) { return Integer(totient(n) - moebius(n)); }},
        {"A182411", "super Catalan triangle (2n)!(2k)!/(n!k!(n+k)!), rows read by k <= n", 0,
         [](long i) {
             long n = 0;
             while ((n + 1) * (n + 2) / 2 <= i) ++n;
             return super_catalan(n, i - n * (n + 1) / 2);
         }},
        {"A000108", "Catalan numbers", 0, [](long n) { return catalan(n); }},
    };
    return r;
}

const Registration* find_registration(const std::string& id) {
    for (const auto& r : registry())
        if (r.id == id) return &r;
    return nullptr;
}

CheckReport crosscheck(const SequenceFixture& fixture, const Registration& reg, std::size_t count) {
    CheckReport rep("oeis." + reg.id, reg.description + " matches " + reg.id);
    const long start = std::max(fixture.offset, reg.first_index);
    const long skip = start - fixture.offset;
    if (fixture.terms.size() < static_cast<std::size_t>(skip) + count) {
        rep.fail("fixture has only " + std::to_string(fixture.terms.size()) + " terms");
        return rep;
    }
    for (std::size_t i = 0; i < count; ++i) {
        const long n = start + static_cast<long>(i);
        const Integer& want = fixture.terms[static_cast<std::size_t>(skip) + i];
        const Integer got = reg.term(n);
        ++rep.cases;
        if (got != want) rep.fail("a(" + std::to_string(n) + "): expected " + want.get_str() + ", got " + got.get_str());
    }
    return rep;
}

CheckReport crosscheck(const std::string& id, std::size_t count, const FetchOptions& opts) {
    const Registration* reg = find_registration(id);
    if (!reg) throw std::invalid_argument("no generator registered for " + id);
    return crosscheck(fetch_sequence(id, std::numeric_limits<std::size_t>::max(), opts), *reg, count);
}

}  // namespace trignum
