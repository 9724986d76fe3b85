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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nilcheck/poly.hpp"

namespace nilcheck {

/// One exact comparison of a computed value against a reference value.
struct CheckResult {
    std::string name;
    std::string citation;
    std::string expected;
    std::string computed;
    bool pass = false;
    double seconds = 0;  ///< wall time; not serialized
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool pass() const noexcept;
    /// Appends a check comparing two polynomials in the same ring.
    void compare(std::string name, std::string citation, const GradedPoly& expected, const GradedPoly& computed);
    void record(std::string name, std::string citation, std::string expected, std::string computed, bool pass);
    void append(const Report& other);
    /// Throws VerificationFailure naming the first failing check.
    void require_pass() const;
};

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const Report& r);

}  // namespace nilcheck
