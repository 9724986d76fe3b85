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

#include "nilcheck/errors.hpp"
#include "nilcheck/samelson.hpp"

using namespace nilcheck;

TEST_CASE("p-primary homotopy of spheres") {
    CHECK(p_homotopy(2, 7, 5) == HomotopyAnswer::cyclic_p);
    CHECK(p_homotopy(3, 4, 5) == HomotopyAnswer::zero);
    CHECK(p_homotopy(2, 14, 5) == HomotopyAnswer::unknown);
    CHECK(p_homotopy(2, 13, 5) == HomotopyAnswer::zero);
}

TEST_CASE("factorial ratio valuations") {
    CHECK(nu_p_factorial_ratio(8, 4, 11) == 11);
    CHECK(nu_p_factorial_ratio(2, 2, 5) == 1);
    CHECK(nu_p_factorial_ratio(1, 1, 7) == 1);
    CHECK(legendre(25, 5) == 6);
    CHECK(legendre(4, 5) == 0);
}

TEST_CASE("Bott nontriviality") {
    CHECK(bott_nonzero_su(8, 4, 11) == Nontriviality::yes);
    CHECK(bott_nonzero_su(8, 6, 11) == Nontriviality::yes);
    CHECK(bott_nonzero_su(2, 2, 7) == Nontriviality::inconclusive);
    CHECK(bott_nonzero_sp(3, 1, 7) == Nontriviality::yes);
    CHECK(bott_nonzero_sp(1, 1, 5) == Nontriviality::inconclusive);
    CHECK(bott_nonzero_sp(2, 2, 11) == Nontriviality::inconclusive);
}

TEST_CASE("triple condition") {
    SphereType su8({2, 3, 4, 5, 6, 7, 8});
    const auto r = triple_condition(su8, 11, bott_oracle_su(su8, 11));
    REQUIRE(r.satisfied);
    REQUIRE(r.witness);
    const auto& w = *r.witness;
    const auto& d = su8.half_degrees;
    CHECK(d[w.s - 1] == 2);
    CHECK(d[w.i - 1] + d[w.t - 1] == 12);
    CHECK(d[w.j - 1] + d[w.k - 1] == d[w.t - 1] + 10);
    CHECK(d[w.i - 1] == 8);
    CHECK(d[w.t - 1] == 4);

    SphereType su6({2, 3, 4, 5, 6});
    CHECK_FALSE(triple_condition(su6, 11, bott_oracle_su(su6, 11)).satisfied);

    SphereType two_n({2, 5});
    auto always = [](unsigned, unsigned, unsigned) { return Nontriviality::yes; };
    CHECK_FALSE(triple_condition(two_n, 13, always).satisfied);
    CHECK_FALSE(triple_condition(two_n, 5, always).satisfied);
    CHECK(triple_condition(SphereType({2, 4}), 5, always).satisfied);
}

TEST_CASE("sphere types") {
    CHECK(SphereType({2, 6, 10}).to_string() == "(2,6,10)");
    CHECK_THROWS_AS(SphereType({6, 2}), Error);
    CHECK_THROWS_AS(SphereType({1, 2}), Error);
    CHECK_THROWS_AS(SphereType(std::vector<unsigned>{}), Error);
}
