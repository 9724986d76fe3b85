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

#include "nilcheck/report.hpp"

#include <algorithm>

namespace nilcheck {

bool Report::pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::compare(std::string name, std::string citation, const GradedPoly& expected, const GradedPoly& computed) {
    record(std::move(name), std::move(citation), expected.to_string(), computed.to_string(), expected == computed);
}

void Report::record(std::string name, std::string citation, std::string expected, std::string computed, bool pass) {
    checks.push_back({std::move(name), std::move(citation), std::move(expected), std::move(computed), pass, 0});
}

void Report::append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    seconds += other.seconds;
}

void Report::require_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            throw VerificationFailure(suite + ": " + c.name + " expected " + c.expected + ", computed " + c.computed);
}

nlohmann::json to_json(const CheckResult& c) {
    return {{"name", c.name}, {"citation", c.citation}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"suite", r.suite}, {"pass", r.pass()}, {"checks", checks}};
}

}  // namespace nilcheck
