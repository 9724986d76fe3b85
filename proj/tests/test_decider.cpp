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

#include "nilcheck/decider.hpp"
#include "nilcheck/errors.hpp"

using namespace nilcheck;

namespace {

void expect(const GroupSpec& g, std::uint32_t p, unsigned cls, const std::string& branch) {
    INFO(g.label() << " at " << p);
    const auto v = decide(g, p);
    CHECK(v.cls == NilClass::exact(cls));
    CHECK(v.branch == branch);
}

}  // namespace

TEST_CASE("sphere types of catalogued groups") {
    CHECK(sphere_type(parse_exotic("2b:5")).half_degrees == std::vector<unsigned>{2, 5});
    CHECK(sphere_type(parse_exotic("30")).half_degrees == std::vector<unsigned>{2, 12, 20, 30});
    CHECK(sphere_type(parse_lie("SU:4")).half_degrees == std::vector<unsigned>{2, 3, 4});
    CHECK(sphere_type(parse_lie("Spin:10")).half_degrees == std::vector<unsigned>{2, 4, 5, 6, 8});
    CHECK(sphere_type(parse_lie("Spin:11")).half_degrees == std::vector<unsigned>{2, 4, 6, 8, 10});
    CHECK(sphere_type(parse_lie("E8")).half_degrees == std::vector<unsigned>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK_THROWS_AS(parse_lie("SU:1"), UnknownGroup);
    CHECK_THROWS_AS(parse_lie("Spin:4"), UnknownGroup);
    CHECK_THROWS_AS(parse_exotic("2b:2"), UnknownGroup);
    CHECK_THROWS_AS(parse_lie("Q7"), UnknownGroup);
}

TEST_CASE("regular primes") {
    CHECK_FALSE(is_regular(parse_lie("Sp:2"), 3));
    CHECK(is_regular(parse_lie("SU:7"), 7));
    CHECK(is_regular(parse_exotic("23"), 11));
    CHECK_FALSE(is_regular(parse_exotic("23"), 7));
}

TEST_CASE("reference verdicts") {
    expect(parse_lie("SU:4"), 11, 1, "Theorem 2.4(1)");
    expect(parse_lie("SU:6"), 11, 2, "Theorem 1.3(2)");
    expect(parse_lie("SU:8"), 11, 3, "Theorem 1.3(1)");
    expect(parse_lie("SU:7"), 7, 3, "§3.1.1");
    expect(parse_lie("SU:2"), 2, 2, "§3.1.1");
    expect(parse_lie("F4"), 17, 2, "Theorem 1.3(2)");
    expect(parse_lie("E8"), 41, 2, "Theorem 1.3(2)");
    expect(parse_lie("E8"), 43, 2, "Theorem 1.3(2)");
    expect(parse_lie("E7"), 23, 3, "§3.2.1");
    expect(parse_lie("E8"), 37, 3, "§3.2.2");
    for (auto [g, p] : std::vector<std::pair<const char*, unsigned>>{{"G2", 7}, {"F4", 13}, {"E6", 13}, {"E7", 19}, {"E8", 31}})
        expect(parse_lie(g), p, 3, "§3 (Hamanaka-Kono)");
    expect(parse_lie("Spin:11"), 11, 3, "§3.1.3");
    expect(parse_exotic("2b:12"), 13, 3, "Theorem 1.4(3)");
    expect(parse_exotic("23"), 11, 3, "Theorem 1.4(3)");
    expect(parse_exotic("30"), 31, 3, "Theorem 1.4(3)");
    expect(parse_exotic("23"), 13, 2, "Theorem 1.4(2)");
    expect(parse_exotic("23"), 23, 1, "Theorem 1.4(1)");
}

TEST_CASE("non-regular and unsupported inputs") {
    const auto v = decide(parse_lie("Sp:2"), 3);
    CHECK_FALSE(v.regular);
    CHECK(v.cls == NilClass::unknown());
    CHECK_THROWS_AS(decide(parse_lie("SU:4"), 2), Unsupported);
    CHECK_THROWS_AS(decide(parse_lie("SU:4"), 9), Unsupported);
}

TEST_CASE("raw types") {
    const auto loop = GroupSpec::raw(SphereType({2, 6, 10}), true, Condition::automatic);
    const auto v = decide(loop, 11);
    CHECK(v.cls == NilClass::exact(3));
    CHECK(v.branch == "Corollary 2.5(3)");
    CHECK_FALSE(v.witnesses.empty());

    const auto grouplike = GroupSpec::raw(SphereType({2, 6, 10}), false, Condition::unsatisfied);
    CHECK(decide(grouplike, 13).cls == NilClass::range());
    CHECK(decide(GroupSpec::raw(SphereType({2, 6, 10}), true, Condition::unsatisfied), 13).cls == NilClass::exact(2));
    CHECK(decide(GroupSpec::raw(SphereType({2, 6, 10}), true, Condition::automatic), 23).cls == NilClass::exact(1));
    // uncatalogued type with the automatic condition stays unknown
    CHECK(decide(GroupSpec::raw(SphereType({2, 7, 9}), true, Condition::automatic), 11).cls == NilClass::unknown());
}

TEST_CASE("products take the maximum") {
    const auto prod = GroupSpec::product({parse_lie("SU:4"), parse_lie("SU:8")}, 2);
    const auto v = decide(prod, 11);
    CHECK(v.cls == NilClass::exact(3));
    CHECK(v.witnesses.size() == 3);
    const auto with_unknown = GroupSpec::product({parse_lie("SU:4"), GroupSpec::raw(SphereType({2, 7, 9}), true, Condition::automatic)});
    CHECK(decide(with_unknown, 11).cls == NilClass::unknown());
}

TEST_CASE("verdict JSON") {
    const auto j = to_json(decide(parse_lie("E7"), 23));
    CHECK(j["class"] == 3);
    CHECK(j["branch"] == "§3.2.1");
    CHECK(j["regular"] == true);
    CHECK(to_json(decide(GroupSpec::raw(SphereType({2, 6, 10}), false, Condition::unsatisfied), 13))["class"] == "1 or 2");
}
