// Copyright 2026 the tauforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#ifndef TAUFORGE_CLI_PATH
#error "TAUFORGE_CLI_PATH must point at the tauforge binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TAUFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream(path) << text;
    return path;
}

// elapsed_ms is excluded from the determinism guarantee.
std::string strip_elapsed(std::string s) {
    static const std::regex re("\"elapsed_ms\": [0-9.eE+-]+");
    return std::regex_replace(s, re, "\"elapsed_ms\": 0");
}

} // namespace

TEST_CASE("gen-tau") {
    RunResult r1 = run("gen-tau 1");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == "t1\n");
    RunResult r2 = run("gen-tau 2");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output == "t1^3 - 3*t3\n");
    CHECK(run("gen-tau 0").exit_code == 2);
    CHECK(run("gen-tau").exit_code == 2);
}

TEST_CASE("single checks") {
    CHECK(run("check cubic-ii --tau 1").exit_code == 0);
    CHECK(run("check fay --tau 2").exit_code == 0);
    CHECK(run("check no-such-check").exit_code == 2);
    CHECK(run("check fay --tau 0").exit_code == 2);
}

TEST_CASE("tau files") {
    std::string good = write_temp("tauforge_good.tau", "staircase k = 2\nt1^3 - 3*t3\n");
    CHECK(run("check fay --tau-file " + good).exit_code == 0);
    std::string bad = write_temp("tauforge_bad.tau", "t1^3 - 4*t3\n");
    CHECK(run("check fay --tau-file " + bad).exit_code == 1);
    std::string corrupt = write_temp("tauforge_corrupt.tau", "t1 +* garbage (\n");
    CHECK(run("check fay --tau-file " + corrupt).exit_code == 2);
    // In a suite run a corrupt tau file becomes an error entry with exit 1.
    RunResult suite = run("report-suite --max-k 1 --json --tau-file " + corrupt);
    CHECK(suite.exit_code == 1);
    auto doc = nlohmann::json::parse(suite.output);
    CHECK(doc["reports"].size() == 1);
    CHECK(doc["reports"][0]["status"] == "error");
    CHECK_FALSE(doc["reports"][0]["note"].get<std::string>().empty());
}

TEST_CASE("json reports") {
    RunResult r = run("check seventh --tau 2 --json");
    CHECK(r.exit_code == 0);
    auto arr = nlohmann::json::parse(r.output);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    const auto& rep = arr[0];
    CHECK(rep["check"] == "seventh");
    CHECK(rep["status"] == "pass");
    CHECK(rep["residual_terms"] == 0);
    CHECK(rep["lhs_terms"].get<long long>() > 250);
    CHECK(rep["rhs_terms"].get<long long>() > 250);
    CHECK(rep.contains("elapsed_ms"));
    CHECK(rep["params"]["random_check"] == "probably_zero");
}

TEST_CASE("suite determinism") {
    std::string args = "report-suite --max-k 1 --json --seed 42 --points 10 --sine-points 10";
    RunResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(strip_elapsed(a.output) == strip_elapsed(b.output));
    auto doc = nlohmann::json::parse(a.output);
    CHECK(doc["passed"] == true);
    CHECK(doc["config"]["seed"] == 42);
    // max-k = 1 restricts every tau entry to the first staircase tau.
    for (const auto& rep : doc["reports"]) {
        std::string tau = rep["tau"].get<std::string>();
        CHECK((tau.empty() || tau == "staircase-1"));
    }
}
