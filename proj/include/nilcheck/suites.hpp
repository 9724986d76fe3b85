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

#include <functional>
#include <string>
#include <vector>

#include "nilcheck/report.hpp"

namespace nilcheck {

/// Outcome of one lazily evaluated check.
struct Outcome {
    std::string expected;
    std::string computed;
    bool pass = false;

    static Outcome of(const GradedPoly& expected, const GradedPoly& computed);
    static Outcome of(bool expected, bool computed);
    template <class T>
    static Outcome equal(const T& expected, const T& computed) {
        return {std::to_string(expected), std::to_string(computed), expected == computed};
    }
};

/// Collects checks; in listing mode bodies are not evaluated.
class Checklist {
  public:
    using Progress = std::function<void(const std::string&)>;

    Checklist(bool listing, Progress progress) : listing_(listing), progress_(std::move(progress)) {}

    /// Evaluates `body` unless listing; an exception from `body` becomes a failing check.
    void check(std::string name, std::string citation, const std::function<Outcome()>& body);
    /// Runs an eagerly computed report and adopts its checks.
    void adopt(const std::function<Report()>& run);
    void note(const std::string& message) const;

    bool listing() const noexcept { return listing_; }
    std::vector<CheckResult>& results() noexcept { return results_; }

  private:
    bool listing_;
    Progress progress_;
    std::vector<CheckResult> results_;
};

struct Suite {
    std::string name;
    std::string description;
    std::function<void(Checklist&)> plan;
};

/// girard, i2, i2-5, h3, h4, e7, e8, bott, decider, lemma21, steenrod.
const std::vector<Suite>& suites();
const Suite& find_suite(const std::string& name);

Report run_suite(const Suite& suite, const Checklist::Progress& progress = {});
/// Names and citations without evaluating the checks (the eager E7/E8 suites still compute).
Report list_suite(const Suite& suite);

}  // namespace nilcheck
