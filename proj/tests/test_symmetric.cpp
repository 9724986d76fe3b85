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
#include "nilcheck/steenrod.hpp"
#include "nilcheck/symmetric.hpp"

using namespace nilcheck;

TEST_CASE("symmetric classes in t") {
    CHECK(elementary_class(1, 3, 23) == parse_poly(t_context(3), 23, "t1 + t2 + t3"));
    CHECK(pontryagin_class(1, 5, 23) == power_sum(1, 5, 23));
    CHECK(pontryagin_class(4, 4, 37) == elementary_class(4, 4, 37).pow(2));
    CHECK(expand({SymmetricKind::power_sum, 2, 2}, 7) == parse_poly(t_context(2), 7, "t1^4 + t2^4"));
    CHECK_THROWS_AS(elementary_class(4, 3, 23), IndexError);
    CHECK_THROWS_AS(pontryagin_class(0, 3, 23), IndexError);
}

TEST_CASE("Girard expansions") {
    const auto ctx = pontryagin_context(4);
    auto P = [&](const std::string& s) { return parse_poly(ctx, 23, s); };
    CHECK(girard_expand(1, 4, 23) == P("p1"));
    CHECK(girard_expand(2, 4, 23) == P("p1^2 - 2*p2"));
    CHECK(girard_expand(3, 4, 23) == P("p1^3 - 3*p1*p2 + 3*p3"));
    CHECK(girard_expand(4, 4, 23) == P("p1^4 - 4*p1^2*p2 + 4*p1*p3 + 2*p2^2 - 4*p4"));
    CHECK_THROWS_AS(girard_expand(23, 4, 23), Unsupported);
}

TEST_CASE("to_pc_basis") {
    const unsigned n = 4;
    const auto pc = pc_context(n);
    CHECK(to_pc_basis(pontryagin_class(4, n, 11), n) == parse_poly(pc, 11, "c4^2"));
    CHECK(to_pc_basis(elementary_class(4, n, 11), n) == parse_poly(pc, 11, "c4"));
    CHECK(to_pc_basis(power_sum(2, n, 11), n) == parse_poly(pc, 11, "p1^2 - 2*p2"));
    // polynomials in the p_k alone have no c_n-odd part
    const auto f = pontryagin_class(1, n, 11).pow(3) + pontryagin_class(2, n, 11) * pontryagin_class(3, n, 11);
    CHECK(to_pc_basis(f, n) == parse_poly(pc, 11, "p1^3 + p2*p3"));
    CHECK_THROWS_AS(to_pc_basis(parse_poly(t_context(n), 11, "t1^2"), n), NotInvariant);
    CHECK_THROWS_AS(to_pc_basis(parse_poly(t_context(n), 11, "t1*t2*t3*t4^3 + t1^2"), n), NotInvariant);
    CHECK_THROWS_AS(to_pc_basis(elementary_class(1, n, 11), n), NotInvariant);
}

TEST_CASE("P1 of c8 is s18 c8") {
    const auto c8 = elementary_class(8, 8, 37);
    const auto expected = to_pc_basis(power_sum(18, 8, 37) * c8, 8);
    CHECK(to_pc_basis(steenrod_p1(c8), 8) == expected);
    CHECK(pc_steenrod_p1(parse_poly(pc_context(8), 37, "c8")) == expected);
}

TEST_CASE("P1 of power sums") {
    CHECK(p1_power_sum(1, 5, 23) == power_sum(12, 5, 23).scaled(2));
    CHECK(p1_power_sum(3, 5, 23) == power_sum(14, 5, 23).scaled(6));
    CHECK(p1_power_sum(1, 8, 37) == power_sum(19, 8, 37).scaled(2));
    for (unsigned k = 1; k <= 4; ++k) CHECK(steenrod_p1(power_sum(k, 3, 13)) == p1_power_sum(k, 3, 13));
}

TEST_CASE("pc round trip") {
    const auto pc = pc_context(5);
    const auto g = parse_poly(pc, 23, "p1^2*c5 - 3*p2*p4 + c5^2 + 7*p3");
    CHECK(to_pc_basis(from_pc_basis(g), 5) == g);
}
