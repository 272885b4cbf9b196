/*
   Copyright 2026 The classprod Authors

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

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "classprod/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "classprod");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = classprod::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

/// Splits one CSV record, honouring double-quoted cells.
std::vector<std::string> csv_cells(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '"' && quoted && i + 1 < line.size() && line[i + 1] == '"') {
            out.back() += '"';
            ++i;
        } else if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

TEST(Cli, EtaExactForUnipotentPair) {
    const auto o = run({"eta", "--group", "GL", "--field", "3^1", "--n", "2", "--a", "1,1;0,1", "--b", "1,1;0,1", "--exact"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_GE(j["eta_exact"].get<int>(), 2);
    EXPECT_TRUE(j["lower_bound"].is_null());
    EXPECT_EQ(j["modulus"], nlohmann::json::array({0, 1}));
    EXPECT_EQ(j["group"], "GL(2,3)");
}

TEST(Cli, EtaDefaultReportsBothAndBoundIsBelow) {
    const auto o = run({"eta", "--group", "SL", "--field", "2^2", "--n", "2", "--a", "1,1;0,1", "--b", "0,1;1,1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_LE(j["lower_bound"].get<int>(), j["eta_exact"].get<int>());
    EXPECT_FALSE(j["bound_path"].get<std::string>().empty());
}

TEST(Cli, BoundOnlySkipsEnumeration) {
    // GL(3,7) is far beyond the enumeration budget
    const auto o = run({"eta", "--group", "GL", "--field", "7^1", "--n", "3", "--a", "1,1,0;0,1,0;0,0,2", "--b",
                        "0,0,1;1,0,0;0,1,0", "--bound-only", "--budget", "1000"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_TRUE(j["eta_exact"].is_null());
    EXPECT_GE(j["lower_bound"].get<int>(), 6);
}

TEST(Cli, MinScanGl33) {
    const auto o = run({"min-scan", "--group", "GL", "--field", "3^1", "--n", "3"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(json_of(o)["min"], 4);
}

TEST(Cli, JsonIndependentOfThreads) {
    const std::vector<std::string> base{"min-scan", "--group", "SL", "--field", "5^1", "--n", "2"};
    auto one = base, many = base;
    one.insert(one.end(), {"--threads", "1"});
    many.insert(many.end(), {"--threads", "6"});
    EXPECT_EQ(run(one).out, run(many).out);
    const std::vector<std::string> bound{"bound", "--group", "SL", "--field", "7^1", "--n", "2", "--a", "1,1;0,1",
                                         "--b", "2,0;0,4", "--seed", "5"};
    auto b1 = bound, b2 = bound;
    b1.insert(b1.end(), {"--threads", "1"});
    b2.insert(b2.end(), {"--threads", "3"});
    EXPECT_EQ(run(b1).out, run(b2).out);
}

TEST(Cli, CsvCarriesTheJsonNumbers) {
    const std::vector<std::string> args{"min-scan", "--group", "GL", "--field", "2^2", "--n", "2"};
    auto csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const auto j = json_of(run(args));
    const auto lines = split(run(csv_args).out, '\n');
    ASSERT_EQ(lines.size(), j["pairs"].size() + 1);
    EXPECT_EQ(lines[0], "group,class_a,class_b,eta");
    for (std::size_t i = 0; i < j["pairs"].size(); ++i) {
        const auto& p = j["pairs"][i];
        EXPECT_EQ(csv_cells(lines[i + 1]), (std::vector<std::string>{"GL(2,4)", p["class_a"], p["class_b"],
                                                                     std::to_string(p["eta"].get<int>())}));
    }

    const std::vector<std::string> eta{"eta", "--group", "GL", "--field", "3^1", "--n", "2", "--a", "2,0;0,1", "--b", "1,1;0,1"};
    auto eta_csv = eta;
    eta_csv.insert(eta_csv.end(), {"--format", "csv"});
    const auto je = json_of(run(eta));
    const auto rows = split(run(eta_csv).out, '\n');
    ASSERT_EQ(rows.size(), 2u);
    const auto header = csv_cells(rows[0]);
    const auto cells = csv_cells(rows[1]);
    ASSERT_EQ(header.size(), cells.size()) << rows[1];
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto& v = je[header[i]];
        if (v.is_number()) {
            EXPECT_EQ(cells[i], std::to_string(v.get<long long>())) << header[i];
        }
    }
}

TEST(Cli, TableFormat) {
    const auto o = run({"field", "--field", "3^2", "--format", "table"});
    ASSERT_EQ(o.code, 0);
    const auto lines = split(o.out, '\n');
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0].rfind("field", 0), 0u);
    EXPECT_NE(lines[2].find("1,0,1"), std::string::npos);
}

TEST(Cli, FieldAndCanon) {
    const auto f = json_of(run({"field", "--field", "2^3"}));
    EXPECT_EQ(f["modulus"], nlohmann::json::array({1, 0, 1, 1}));
    EXPECT_EQ(f["q"], 8);
    const auto c = json_of(run({"canon", "--field", "3^1", "--a", "1,1,0;0,1,0;0,0,1"}));
    EXPECT_EQ(c["invariant_factors"], nlohmann::json::parse("[[2,1],[1,1,1]]"));
    EXPECT_EQ(c["class_id"], "(2,1)(1,1,1)");
}

TEST(Cli, ClassesListing) {
    const auto j = json_of(run({"classes", "--group", "SL", "--field", "3^1", "--n", "2"}));
    EXPECT_EQ(j["class_count"], 7);
    EXPECT_EQ(j["order"], 24);
    int total = 0;
    for (const auto& c : j["classes"]) total += c["size"].get<int>();
    EXPECT_EQ(total, 24);
}

TEST(Cli, BoundReportHasOneWitnessPerTrace) {
    const auto o = run({"bound", "--group", "SL", "--field", "3^2", "--n", "2", "--a", "1,1;0,1", "--b", "1,1;0,1"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_EQ(j["witnesses"].size(), j["size"].get<std::size_t>());
    EXPECT_EQ(j["traces"].size(), j["size"].get<std::size_t>());
    EXPECT_GE(j["size"].get<int>(), 5);
    EXPECT_EQ(j["lemma_path"], "main1-ii");
}

TEST(Cli, VerifySuites) {
    const auto o = run({"verify", "--suite", "main1", "--field", "2^3", "--trials", "100", "--seed", "9"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = json_of(o);
    EXPECT_EQ(j["suites"][0]["mismatches"], 0);
    EXPECT_EQ(run({"verify", "--field", "5^1", "--trials", "50"}).code, 0);
}

TEST(Cli, ReproduceDefaultSet) {
    const auto o = run({"reproduce", "--format", "json"});
    ASSERT_EQ(o.code, 0) << o.out;
    EXPECT_TRUE(json_of(o)["all_pass"].get<bool>());
}

TEST(Cli, MalformedInputExitsOne) {
    EXPECT_EQ(run({"field", "--field", "6^1"}).code, 1);
    EXPECT_EQ(run({"field", "--field", "three"}).code, 1);
    EXPECT_EQ(run({"eta", "--group", "GL", "--field", "3^1", "--n", "2", "--a", "1,1;0", "--b", "1,0;0,1"}).code, 1);
    EXPECT_EQ(run({"eta", "--group", "GL", "--field", "3^1", "--n", "3", "--a", "1,1;0,1", "--b", "1,0;0,1"}).code, 1);
    EXPECT_EQ(run({"eta", "--group", "SL", "--field", "3^1", "--n", "2", "--a", "2,0;0,1", "--b", "1,0;0,1"}).code, 1);
    EXPECT_EQ(run({"eta", "--group", "XL", "--field", "3^1", "--n", "2", "--a", "1,0;0,1", "--b", "1,0;0,1"}).code, 1);
    EXPECT_EQ(run({"bound", "--group", "GL", "--field", "3^1", "--n", "2", "--a", "2,0;0,2", "--b", "1,1;0,1"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
}

TEST(Cli, BudgetRefusalExitsTwo) {
    EXPECT_EQ(run({"classes", "--group", "GL", "--field", "5^1", "--n", "4"}).code, 2);
    EXPECT_EQ(run({"min-scan", "--group", "GL", "--field", "5^1", "--n", "2", "--budget", "10"}).code, 2);
}

TEST(Cli, ThreadsFromEnvironment) {
    ::setenv("CLASSPROD_THREADS", "3", 1);
    EXPECT_EQ(classprod::cli::default_threads(), 3u);
    ::setenv("CLASSPROD_THREADS", "zero", 1);
    EXPECT_GE(classprod::cli::default_threads(), 1u);
    ::unsetenv("CLASSPROD_THREADS");
}

TEST(Cli, BinaryRuns) {
    const std::string cmd = std::string(CLASSPROD_CLI_PATH) + " field --field 3^2 > /dev/null";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
    const std::string bad = std::string(CLASSPROD_CLI_PATH) + " field --field 4^1 2> /dev/null";
    const int status = std::system(bad.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 1);
}
