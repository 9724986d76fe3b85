/*
   Copyright 2026 The nilcheck Authors

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

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(NILCHECK_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

nlohmann::json run_json(const std::string& args) {
    const auto r = run(args + " --output json");
    REQUIRE(r.status == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("nil verdicts") {
    const auto e7 = run_json("nil --lie E7 --prime 23");
    CHECK(e7["class"] == 3);
    CHECK(e7["branch"] == "§3.2.1");
    CHECK(run_json("nil --lie SU:8 --prime 11")["class"] == 3);
    CHECK(run_json("nil --exotic 2b:12 --prime 13")["class"] == 3);
    CHECK(run_json("nil --type 2,6,10 --prime 11 --loop")["class"] == 3);
    CHECK(run_json("nil --type 2,6,10 --prime 13 --condition unsatisfied")["class"] == "1 or 2");
    CHECK(run_json("nil --lie SU:4 --lie SU:8 --prime 11")["class"] == 3);
}

TEST_CASE("bott, invariants, p1 and lemma21") {
    const auto b = run("bott su 8 4 --prime 11");
    CHECK(b.status == 0);
    CHECK(b.out == "11\n");
    const auto inv = run_json("invariants I2:6 --prime 7 --p1");
    CHECK(inv["degrees"] == nlohmann::json({2, 6}));
    CHECK(inv["p1"][0]["text"] == "x2*x6");
    CHECK(run_json("p1 I2:5 --prime 11 --generator 0")["text"] == "-2*x2^6 + x2*x5^2");
    const auto h = run_json("lemma21 heisenberg3");
    CHECK(h["class"] == 2);
    CHECK(h["agree"] == true);
}

TEST_CASE("verify") {
    const auto r = run("verify decider --output json");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["pass"] == true);
    const auto listing = run("verify all --list --output json");
    CHECK(listing.status == 0);
    const auto j = nlohmann::json::parse(listing.out);
    REQUIRE(j["suites"].size() == 11);
    for (const auto& s : j["suites"])
        for (const auto& c : s["checks"]) CHECK_FALSE(c["citation"].get<std::string>().empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("nil --lie SU:8 --prime 12").status == 2);
    CHECK(run("nil --lie Foo:3 --prime 11").status == 2);
    CHECK(run("nil --type 2,,6 --prime 11").status == 2);
    CHECK(run("nil --type 6,2 --prime 11").status == 2);
    CHECK(run("nil --prime 11").status == 2);
    CHECK(run("invariants K9 --prime 11").status == 2);
    CHECK(run("verify nothing").status == 2);
    CHECK(run("").status == 2);
}

TEST_CASE("JSON output is byte-identical across runs") {
    for (const char* args : {"nil --lie SU:8 --prime 11 --output json", "invariants H3 --prime 11 --p1 --output json",
                             "verify e7 --output json"}) {
        const auto a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}
