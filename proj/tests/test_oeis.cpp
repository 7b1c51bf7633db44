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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "trignum/errors.hpp"
#include "trignum/oeis.hpp"

using namespace trignum;
namespace fs = std::filesystem;

namespace {

class CountingTransport : public Transport {
   public:
    explicit CountingTransport(std::string body) : body_(std::move(body)) {}
    std::string get(const std::string& host, const std::string& path) override {
        ++calls;
        last_host = host;
        last_path = path;
        return body_;
    }
    int calls = 0;
    std::string last_host, last_path;

   private:
    std::string body_;
};

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("trignum_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST(BFile, Parse) {
    const auto f = parse_bfile("A000001", "# comment\n\n3 10\r\n4 -20\n5 123456789012345678901234567890\n");
    EXPECT_EQ(f.offset, 3);
    ASSERT_EQ(f.terms.size(), 3u);
    EXPECT_EQ(f.terms[1], -20);
    EXPECT_EQ(f.terms[2], Integer("123456789012345678901234567890"));
}

TEST(BFile, ParseErrorsCarryLineNumbers) {
    try {
        parse_bfile("A000001", "0 1\n1 2\n3 4\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    try {
        parse_bfile("A000001", "# x\n0 1\n1 abc\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_bfile("A000001", "# only a comment\n"), ParseError);
}

TEST(BFile, IdsAndNames) {
    EXPECT_TRUE(is_valid_oeis_id("A000108"));
    EXPECT_FALSE(is_valid_oeis_id("A00108"));
    EXPECT_FALSE(is_valid_oeis_id("a000108"));
    EXPECT_FALSE(is_valid_oeis_id("A0001080"));
    EXPECT_EQ(bfile_name("A000108"), "b000108.txt");
}

TEST(Fixtures, BundledRoundTrip) {
    for (const auto& reg : registry()) {
        const auto f = fetch_sequence(reg.id, 1000, true);
        EXPECT_EQ(f.source, FixtureSource::Bundled);
        EXPECT_GE(f.terms.size(), 20u) << reg.id;
        const auto g = parse_bfile(reg.id, format_bfile(f));
        EXPECT_EQ(g.offset, f.offset);
        EXPECT_EQ(g.terms, f.terms);
    }
}

TEST(Fixtures, AllRegisteredSequencesMatch) {
    ASSERT_EQ(registry().size(), 9u);
    for (const auto& reg : registry()) {
        FetchOptions o;
        o.offline = true;
        const CheckReport r = crosscheck(reg.id, 50, o);
        EXPECT_TRUE(r.passed) << summary_line(r);
    }
    ASSERT_NE(find_registration("A182411"), nullptr);
    EXPECT_EQ(find_registration("A999999"), nullptr);
}

TEST(Fixtures, CrosscheckDetectsMismatch) {
    const Registration* reg = find_registration("A000108");
    SequenceFixture f = fetch_sequence("A000108", 20, true);
    f.terms[5] += 1;
    const CheckReport r = crosscheck(f, *reg, 20);
    EXPECT_FALSE(r.passed);
    EXPECT_NE(r.counterexample.find("a(5)"), std::string::npos) << r.counterexample;
}

TEST(Fetch, OfflineNeverCallsTransport) {
    const fs::path empty = scratch_dir("empty_bundle");
    const fs::path cache = scratch_dir("empty_cache");
    CountingTransport t("0 1\n1 1\n");
    FetchOptions o;
    o.offline = true;
    o.bundled_dir = empty.string();
    o.cache_dir = cache.string();
    o.transport = &t;
    EXPECT_THROW(fetch_sequence("A000045", 10, o), NotAvailableOffline);
    o.bundled_dir.clear();
    EXPECT_NO_THROW(fetch_sequence("A000108", 10, o));
    EXPECT_EQ(t.calls, 0);
}

TEST(Fetch, NetworkResultIsCached) {
    const fs::path empty = scratch_dir("empty_bundle2");
    const fs::path cache = scratch_dir("cache");
    CountingTransport t("# fake\n0 0\n1 1\n2 1\n3 2\n4 3\n");
    FetchOptions o;
    o.bundled_dir = empty.string();
    o.cache_dir = cache.string();
    o.transport = &t;
    const auto f = fetch_sequence("A000045", 10, o);
    EXPECT_EQ(t.calls, 1);
    EXPECT_EQ(f.source, FixtureSource::Network);
    EXPECT_NE(t.last_path.find("b000045.txt"), std::string::npos);
    EXPECT_TRUE(fs::exists(cache / "b000045.txt"));

    o.offline = true;
    const auto g = fetch_sequence("A000045", 10, o);
    EXPECT_EQ(t.calls, 1);
    EXPECT_EQ(g.source, FixtureSource::Cached);
    EXPECT_EQ(g.terms, f.terms);
    fs::remove_all(cache);
    fs::remove_all(empty);
}

TEST(Fetch, MalformedId) {
    EXPECT_THROW(fetch_sequence("B000108", 10, true), std::invalid_argument);
}
