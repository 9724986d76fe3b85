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
#include "nilcheck/finite_group.hpp"
#include "nilcheck/invariants.hpp"
#include "nilcheck/sampling.hpp"
#include "nilcheck/steenrod.hpp"

using namespace nilcheck;

namespace {

std::shared_ptr<const ReflectionGroup> dihedral(unsigned n, std::uint32_t p) {
    return std::make_shared<const ReflectionGroup>(build_dihedral(n, p));
}

}  // namespace

TEST_CASE("reflection groups") {
    CHECK(build_dihedral(4, 5).order() == 8);
    CHECK(build_dihedral(5, 11).order() == 10);
    CHECK(primitive_root_of_unity(5, 11) == 3u);
    const auto klein = build_dihedral(2, 3);
    CHECK(klein.order() == 4);
    for (const auto& a : klein.elements())
        for (const auto& b : klein.elements()) CHECK(a * b == b * a);
    CHECK(sqrt_mod(5, 11) == 4u);
    CHECK(sqrt_mod(5, 31) == 6u);
    CHECK_FALSE(sqrt_mod(5, 7).has_value());
    CHECK(build_coxeter_h(3, 11).order() == 120);
    CHECK_THROWS_AS(build_coxeter_h(3, 7), UnsupportedPrime);
    CHECK_THROWS_AS(build_dihedral(5, 13), UnsupportedPrime);  // 5 does not divide 12
    CHECK_THROWS_AS(build_dihedral(4, 2), UnsupportedPrime);
}

TEST_CASE("close_group bounds the enumeration") {
    const auto g = build_dihedral(6, 7);
    CHECK(close_group(g.generators(), 100).size() == 12);
    CHECK_THROWS_AS(close_group(g.generators(), 5), RepresentationError);
}

TEST_CASE("Reynolds operator") {
    const auto g = build_dihedral(4, 5);
    const auto t = t_context(2);
    CHECK(reynolds(g, parse_poly(t, 5, "t1*t2")) == parse_poly(t, 5, "t1*t2"));
    CHECK(reynolds(g, parse_poly(t, 5, "t1^2")).is_zero());
    CHECK(reynolds(g, GradedPoly::constant(t, 5, 1)) == GradedPoly::constant(t, 5, 1));
    CHECK(is_invariant(g, parse_poly(t, 5, "t1^4 + t2^4")));
    CHECK_FALSE(is_invariant(g, parse_poly(t, 5, "t1^4")));
}

TEST_CASE("dihedral invariants at p = n + 1") {
    for (unsigned n : {4u, 6u, 10u}) {
        const std::uint32_t p = n + 1;
        const auto gs = fundamental_invariants(dihedral(n, p), {2, n});
        const auto t = t_context(2);
        CHECK(gs.generators()[0] == parse_poly(t, p, "t1*t2"));
        CHECK(gs.generators()[1] == parse_poly(t, p, "t1^" + std::to_string(n) + " + t2^" + std::to_string(n)));
        const auto xn = "x" + std::to_string(n);
        CHECK(gs.p1_expansion(0) == parse_poly(gs.variables(), p, "x2*" + xn));
        CHECK(gs.p1_expansion(1) == parse_poly(gs.variables(), p, "2*x2^" + std::to_string(n) + " - " + xn + "^2"));
        const auto v = check_condition(gs);
        CHECK(v.satisfied);
        CHECK(v.witnesses.size() == 2);
    }
}

TEST_CASE("I2(5) expansions") {
    const auto gs11 = fundamental_invariants(dihedral(5, 11), {2, 5});
    CHECK(gs11.p1_expansion(0) == parse_poly(gs11.variables(), 11, "x2*x5^2 - 2*x2^6"));
    CHECK(express_in_generators(gs11, steenrod_p1(parse_poly(t_context(2), 11, "t1*t2"))) == gs11.p1_expansion(0));
    CHECK(express_in_generators(gs11, gs11.generators()[0]) == parse_poly(gs11.variables(), 11, "x2"));
    const auto gs31 = fundamental_invariants(dihedral(5, 31), {2, 5});
    CHECK(gs31.p1_expansion(1) ==
          parse_poly(gs31.variables(), 31, "5*x5^7 - 35*x2^5*x5^5 + 70*x2^10*x5^3 - 35*x2^15*x5"));
    CHECK(reduce_mod_monomials(gs31.p1_expansion(1), {{0, 1}}) == parse_poly(gs31.variables(), 31, "5*x5^7"));
    CHECK_THROWS_AS(express_in_generators(gs11, parse_poly(t_context(2), 11, "t1^2")), NotInSpan);
}

TEST_CASE("degree checks") {
    CHECK_THROWS_AS(fundamental_invariants(dihedral(4, 5), {2, 3}), DegreesMismatch);
    CHECK_THROWS_AS(fundamental_invariants(dihedral(4, 5), {2, 2}), DegreesMismatch);
    CHECK(hilbert_coefficient({2, 6, 10}, 12) == 4);  // 2^6, 2^3 6, 6^2, 2 10
}

TEST_CASE("H3 at p = 11") {
    const auto gs = fundamental_invariants(std::make_shared<const ReflectionGroup>(build_coxeter_h(3, 11)), {2, 6, 10});
    CHECK(gs.half_degrees() == std::vector<unsigned>{2, 6, 10});
    CHECK(generator_coefficient(gs, gs.p1_expansion(0), {{0, 1}, {2, 1}}) != 0);
    const auto v = check_condition(gs);
    CHECK(v.satisfied);
    const auto j = to_json(gs, true);
    CHECK(j["order"] == 120);
    CHECK(j["p1"].size() == 3);
}

TEST_CASE("check_condition rejects degenerate degrees") {
    const auto g = std::make_shared<const ReflectionGroup>(build_dihedral(2, 3));
    const auto gs = fundamental_invariants(g, {2, 2});
    CHECK_THROWS_AS(check_condition(gs), Unsupported);
}

TEST_CASE("finite groups and the generator commutator test") {
    CHECK(nilpotency_class(named_group("abelian"), 6) == 1u);
    CHECK(nilpotency_class(named_group("heisenberg3"), 6) == 2u);
    CHECK(named_group("heisenberg3").order() == 27);
    CHECK(nilpotency_class(named_group("dihedral8"), 6) == 2u);
    CHECK(nilpotency_class(named_group("dihedral16"), 6) == 3u);
    CHECK(nilpotency_class(named_group("dihedral16"), 2) == std::nullopt);
    CHECK(nilpotency_class(named_group("s4"), 6) == std::nullopt);
    CHECK(nilpotency_class_oracle(named_group("s4"), 6) == std::nullopt);
    CHECK_THROWS_AS(named_group("monster"), UnknownGroup);
    const auto x = named_group("s4").generators()[0];
    CHECK(commutator(x, x).is_identity());
}
