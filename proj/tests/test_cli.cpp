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

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "trignum");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = trignum::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"gen", "W", "4"}).code, 2);
    EXPECT_EQ(run({"gen", "T"}).code, 2);
    EXPECT_EQ(run({"gen", "T", "4", "xml"}).code, 2);
    EXPECT_EQ(run({"verify", "nope", "5"}).code, 2);
    EXPECT_EQ(run({"oeis", "A12"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GenFormats) {
    const CliRun csv = run({"gen", "M", "4", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "1,2,6,20");
    const CliRun named = run({"gen", "--object", "M", "--size", "4", "--format", "csv"});
    EXPECT_EQ(named.out, csv.out);

    const CliRun js = run({"gen", "T", "5", "json"});
    ASSERT_EQ(js.code, 0);
    const auto j = nlohmann::json::parse(js.out);
    EXPECT_EQ(j["object"], "T");
    ASSERT_EQ(j["rows"].size(), 5u);
    EXPECT_EQ(j["rows"][2][2], "2");
    EXPECT_EQ(j["rows"][0][2], "-1");

    const CliRun plain = run({"gen", "pyramidal", "1"});
    EXPECT_NE(plain.out.find("1  3  5  7"), std::string::npos) << plain.out;
    EXPECT_NE(run({"gen", "S", "7"}).out.find("-420"), std::string::npos);
}

TEST(Cli, Deterministic) {
    EXPECT_EQ(run({"gen", "Z", "12", "json"}).out, run({"gen", "Z", "12", "json"}).out);
    EXPECT_EQ(run({"verify", "all", "8"}).out, run({"verify", "all", "8", "--jobs", "3"}).out);
}

TEST(Cli, VerifySuites) {
    const CliRun ok = run({"verify", "all", "12"});
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    for (const char* s : {"chebyshev", "riordan", "basechange", "fourier", "spread"}) {
        const CliRun bad = run({"verify", s, "10", "--inject-fault"});
        EXPECT_EQ(bad.code, 1) << s;
        EXPECT_NE(bad.out.find("FAIL"), std::string::npos) << s;
    }
}

TEST(Cli, FactorAndFixedPoints) {
    const CliRun f1 = run({"factor", "1"});
    EXPECT_EQ(f1.code, 0);
    EXPECT_NE(f1.out.find("Phi_1 = x"), std::string::npos) << f1.out;
    const CliRun f17 = run({"factor", "17", "--report-pyramidal"});
    EXPECT_EQ(f17.code, 0);
    EXPECT_NE(f17.out.find("psi_16"), std::string::npos);
    const CliRun fp = run({"fixed-points", "100"});
    EXPECT_EQ(fp.code, 0) << fp.out;
}

TEST(Cli, Oeis) {
    const CliRun ok = run({"oeis", "A000330", "--offline", "--terms", "6"});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_NE(ok.out.find("1 5 14 30 55 91"), std::string::npos) << ok.out;
    const CliRun missing = run({"oeis", "A999999", "--offline"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_NE(missing.err.find("neither bundled nor cached"), std::string::npos) << missing.err;
}
