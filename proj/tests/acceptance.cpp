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

// Acceptance criteria 1-12: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (no arguments runs all twelve)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "nilcheck/errors.hpp"
#include "nilcheck/suites.hpp"

using namespace nilcheck;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    std::string title;
    std::function<Verdict()> run;
};

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

void print_progress(const std::string& m) { std::cerr << "  .. " << m << std::endl; }

// Runs a suite and keeps the checks selected by `keep`; fails on any failing check or an exceeded budget.
Verdict from_suite(const std::string& suite, double budget, const std::function<bool(const CheckResult&)>& keep = {}) {
    const auto r = run_suite(find_suite(suite), print_progress);
    Verdict v;
    std::size_t used = 0;
    for (const auto& c : r.checks) {
        if (keep && !keep(c)) continue;
        ++used;
        if (!c.pass) {
            v.pass = false;
            v.detail += "\n      " + c.name + ": expected " + c.expected + ", computed " + c.computed;
        }
    }
    if (used == 0) {
        v.pass = false;
        v.detail += "\n      no checks selected";
    }
    v.detail = std::to_string(used) + " checks in " + seconds(r.seconds) + v.detail;
    if (r.seconds > budget) {
        v.pass = false;
        v.detail += " (budget " + seconds(budget) + " exceeded)";
    }
    return v;
}

const std::map<int, Criterion>& criteria() {
    static const std::map<int, Criterion> all{
        {1, {"Girard expansions, n <= 8, k <= 22, p in {23, 37}, < 5 s", [] { return from_suite("girard", 5); }}},
        {2, {"I2(n) invariants and P1 x2 = x2 xn at p = n + 1, < 1 s each",
             [] {
                 const auto r = run_suite(find_suite("i2"), print_progress);
                 std::map<std::string, double> per_group;
                 Verdict v;
                 for (const auto& c : r.checks) {
                     per_group[c.name.substr(0, c.name.find(':'))] += c.seconds;
                     if (!c.pass) v.pass = false, v.detail += "\n      " + c.name + ": computed " + c.computed;
                 }
                 double worst = 0;
                 for (const auto& [g, s] : per_group) worst = std::max(worst, s);
                 if (worst > 1) v.pass = false;
                 v.detail = std::to_string(per_group.size()) + " groups, slowest " + seconds(worst) + v.detail;
                 return v;
             }}},
        {3, {"I2(5) at p = 11: P1 x2 = x2 x5^2 - 2 x2^6",
             [] { return from_suite("i2-5", 60, [](const CheckResult& c) { return contains(c.name, "p = 11"); }); }}},
        {4, {"I2(5) at p = 31: P1 x2 = x2 x5^6, P1 x5 = 5 x5^7 mod (x2^2)",
             [] {
                 return from_suite("i2-5", 60, [](const CheckResult& c) { return contains(c.name, "p = 31") && contains(c.name, "mod"); });
             }}},
        {5, {"H3 at p = 11: order 120, degrees (2,6,10), y2 y10 in P1 y2, < 30 s",
             [] { return from_suite("h3", 30, [](const CheckResult& c) { return contains(c.name, "p = 11"); }); }}},
        {6, {"H4 at p = 31: order 14400, degrees (2,12,20,30), b/c/d case split, <= 15 min",
             [] { return from_suite("h4", 900); }}},
        {7, {"E7 at p = 23: pi and pi' values and kill lists, < 60 s", [] { return from_suite("e7", 60); }}},
        {8, {"E8 at p = 37: pi, pi' chain and phi congruences, < 5 min", [] { return from_suite("e8", 300); }}},
        {9, {"Bott: Legendre = factorization, SU(n) witness pairs", [] { return from_suite("bott", 60); }}},
        {10, {"decider regression verdicts with citations, < 1 s", [] { return from_suite("decider", 1); }}},
        {11, {"Lemma 2.1 generator test = all-tuples oracle; S4 rejected for k <= 6", [] { return from_suite("lemma21", 60); }}},
        {12, {"P1 derivation law, naturality, degree shift over F_11", [] { return from_suite("steenrod", 60); }}},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> chosen;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (!criteria().count(k)) {
            std::cerr << "unknown criterion " << argv[i] << '\n';
            return 2;
        }
        chosen.push_back(k);
    }
    if (chosen.empty())
        for (const auto& [k, c] : criteria()) chosen.push_back(k);

    bool all = true;
    for (int k : chosen) {
        const auto& c = criteria().at(k);
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        all = all && v.pass;
        std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << "  " << c.title << "  -- " << v.detail << std::endl;
    }
    return all ? 0 : 1;
}
