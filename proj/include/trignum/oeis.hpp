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

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "trignum/check.hpp"
#include "trignum/integer.hpp"

namespace trignum {

enum class FixtureSource { Bundled, Cached, Network };
std::string to_string(FixtureSource s);

struct SequenceFixture {
    std::string id;  // "A000108"
    long offset = 0;  // index of terms[0]
    std::vector<Integer> terms;
    FixtureSource source = FixtureSource::Bundled;
};

/// Parses b-file text: lines "n a(n)" with consecutive n; blank lines and
/// lines starting with '#' are skipped. ParseError carries the 1-based line.
SequenceFixture parse_bfile(const std::string& id, const std::string& text);
std::string format_bfile(const SequenceFixture& f);

/// "A" followed by six digits.
bool is_valid_oeis_id(const std::string& id);
/// "b000108.txt" for "A000108".
std::string bfile_name(const std::string& id);

/// Minimal HTTP GET. Implementations throw NetworkError.
class Transport {
   public:
    virtual ~Transport() = default;
    virtual std::string get(const std::string& host, const std::string& path) = 0;
};
std::unique_ptr<Transport> make_https_transport();

struct FetchOptions {
    bool offline = false;
    std::string bundled_dir;  // empty: the fixtures shipped with the library
    std::string cache_dir;    // empty: $TRIGNUM_OEIS_CACHE, else no cache
    Transport* transport = nullptr;  // null: make_https_transport()
};

/// Resolves bundled -> cache -> network (the last skipped when offline) and
/// returns at most max_terms terms. Network results are written to the cache
/// through a temporary file and a rename. Errors: NotAvailableOffline,
/// NetworkError, ParseError, std::invalid_argument for a malformed id.
SequenceFixture fetch_sequence(const std::string& id, std::size_t max_terms, const FetchOptions& opts);
SequenceFixture fetch_sequence(const std::string& id, std::size_t max_terms, bool offline);

std::string default_bundled_dir();
std::string default_cache_dir();

/// An internal sequence registered against an OEIS entry. a(n) is produced
/// for OEIS indices n >= first_index; earlier indices are not compared.
struct Registration {
    std::string id;
    std::string description;
    long first_index = 0;
    std::function<Integer(long)> term;
};
const std::vector<Registration>& registry();
const Registration* find_registration(const std::string& id);

/// First `count` comparable terms of the fixture equal the registered
/// generator. A fixture with too few terms fails.
CheckReport crosscheck(const SequenceFixture& fixture, const Registration& reg, std::size_t count);
CheckReport crosscheck(const std::string& id, std::size_t count, const FetchOptions& opts);

}  // namespace trignum
