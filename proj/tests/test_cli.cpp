// Copyright 2026 The spinrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinrep/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace spinrep;
using cli::parse_spin;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("spin literals") {
    CHECK(parse_spin("3/2") == HalfInt::from_twice(3));
    CHECK(parse_spin("-1/2") == HalfInt::from_twice(-1));
    CHECK(parse_spin("2") == HalfInt(2));
    CHECK(parse_spin("0") == HalfInt(0));
    CHECK(parse_spin("4/2") == HalfInt(2));  // grammar allows even numerators

    CHECK_THROWS_AS(parse_spin("3/4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spin("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spin(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_spin("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spin("1/2x"), std::invalid_argument);
}

TEST_CASE("decompose prints descending spins with multiplicities") {
    CliResult r = run_cli({"decompose", "1/2", "1/2", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "3/2:1 1/2:2\n");

    r = run_cli({"decompose", "1/2", "1/2", "1/2", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2:1 1:3 0:2\n");

    r = run_cli({"decompose", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "2:1\n");
}

TEST_CASE("cg csv has one row per nonzero coefficient") {
    CliResult r = run_cli({"cg", "--s1", "1/2", "--s2", "1/2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 7);  // header + 6 coefficient rows
    CHECK(r.out.substr(0, r.out.find('\n')) == "s1,s2,s,m,m1,m2,sign,num,den,radicand");
}

TEST_CASE("verify exits zero on a healthy build") {
    CliResult r = run_cli({"verify", "--max-spin", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("checks passed") != std::string::npos);

    CHECK(run_cli({"verify", "--max-spin", "4"}).code == 0);
}

TEST_CASE("verify reports failures with exit code 1") {
    // a tolerance below attainable float accuracy must fail the float suites
    CliResult r = run_cli({"verify", "--max-spin", "0", "--tol", "1e-30", "--format", "json"});
    CHECK(r.code == 1);
    ordered_json j = ordered_json::parse(r.out);
    CHECK(j["all_pass"] == false);
    CHECK(!j["failures"].empty());
}

TEST_CASE("documented json schemas carry the expected fields") {
    CliResult rep = run_cli({"rep", "--s", "3/2", "--format", "json"});
    ordered_json j = ordered_json::parse(rep.out);
    CHECK(j["s"] == "3/2");
    CHECK(j["dim"] == 4);
    CHECK(j["s3"] == ordered_json::array({"3/2", "1/2", "-1/2", "-3/2"}));
    CHECK(j["b"].size() == 3);
    CHECK(j["b"][0] == ordered_json({{"sign", 1}, {"num", "1"}, {"den", "1"}, {"radicand", "3"}}));

    CliResult cg = run_cli({"cg", "--s1", "1/2", "--s2", "1/2", "--format", "json"});
    ordered_json t = ordered_json::parse(cg.out);
    CHECK(t["s1"] == "1/2");
    CHECK(t["blocks"][0]["s"] == "1");
    CHECK(t["blocks"][0]["states"][0]["m"] == "1");
    CHECK(t["blocks"][0]["states"][0]["terms"][0]["m1"] == "1/2");

    // matrices render as nested [re, im] pairs
    ordered_json m = json_of(pauli(2));
    CHECK(m == ordered_json::parse("[[[0.0,0.0],[0.0,-1.0]],[[0.0,1.0],[0.0,0.0]]]"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"decompose", "3/4"}).code == 2);
    CHECK(run_cli({"rep", "--s", "1", "--format", "csv"}).code == 2);
    CHECK(run_cli({"rep", "--s", "-1/2"}).code == 2);
    CHECK(run_cli({"cg", "--s1", "1", "--s2", "1", "--closed-form"}).code == 2);
    CHECK(run_cli({"measure", "--s1", "1/2", "--s2", "1/2", "--s", "1", "--m", "0", "--particle", "3"}).code == 2);
    CHECK(run_cli({"help"}).code == 2);

    CliResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Subcommands") != std::string::npos);
}

TEST_CASE("json output round-trips byte-identically") {
    std::vector<std::vector<std::string>> commands = {
        {"rep", "--s", "5/2", "--format", "json"},
        {"decompose", "1", "1/2", "--format", "json"},
        {"cg", "--s1", "1", "--s2", "1/2", "--format", "json"},
        {"cg", "--s1", "3/2", "--s2", "1/2", "--closed-form", "--convention", "paper", "--format", "json"},
        {"measure", "--s1", "1/2", "--s2", "1/2", "--s", "1", "--m", "0", "--particle", "1", "--seed",
         "7", "--shots", "50", "--format", "json"},
        {"verify", "--max-spin", "1/2", "--format", "json"},
    };
    for (const auto& command : commands) {
        CliResult r = run_cli(command);
        INFO("command: " << command[0]);
        REQUIRE(r.code == 0);
        ordered_json parsed = ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("measure reports exact probabilities and deterministic counts") {
    std::vector<std::string> command = {"measure", "--s1", "1/2", "--s2",       "1/2", "--s",
                                        "1",       "--m",  "0",   "--particle", "1",   "--seed",
                                        "42",      "--shots", "200"};
    CliResult first = run_cli(command);
    CliResult second = run_cli(command);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("P(m = 1/2) = 1/2") != std::string::npos);
    CHECK(first.out.find("P(m = -1/2) = 1/2") != std::string::npos);

    CliResult csv = run_cli({"measure", "--s1", "1/2", "--s2", "1/2", "--s", "0", "--m", "0",
                             "--particle", "2", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "m,num,den,count\n1/2,1,2,0\n-1/2,1,2,0\n");
}

TEST_CASE("output redirects to a file") {
    auto path = std::filesystem::temp_directory_path() / "spinrep_cli_test_output.csv";
    CliResult r = run_cli({"--output", path.string(), "cg", "--s1", "1/2", "--s2", "1/2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(count_lines(content.str()) == 7);
    std::filesystem::remove(path);
}
