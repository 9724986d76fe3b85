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
#include "nilcheck/kernels.hpp"
#include "nilcheck/linalg.hpp"
#include "nilcheck/poly_json.hpp"
#include "nilcheck/quotient.hpp"
#include "nilcheck/reflection_group.hpp"
#include "nilcheck/sampling.hpp"
#include "nilcheck/steenrod.hpp"

using namespace nilcheck;

namespace {

GradedPoly T(std::size_t n, std::uint32_t p, const std::string& text) { return parse_poly(t_context(n), p, text); }

QuotientPresentation e7_target() {
    auto ctx = make_context({"a2", "a3", "a4", "b5"}, {8, 12, 16, 10});
    return QuotientPresentation::from_relations(ctx, 23, {parse_poly(ctx, 23, "12*a4 + a2^2")},
                                                {{"a2", 3}, {"a3", 2}, {"a4", 2}, {"b5", 3}});
}

}  // namespace

TEST_CASE("field inverses") {
    CHECK(fp_inv(FpElement(1, 23)) == FpElement(1, 23));
    CHECK(fp_inv(FpElement(12, 23)) == FpElement(2, 23));
    CHECK(fp_inv(FpElement(36, 37)) == FpElement(36, 37));
    CHECK_THROWS_AS(fp_inv(FpElement(0, 23)), NotInvertible);
    CHECK_THROWS_AS(fp_inv(FpElement(46, 23)), NotInvertible);
}

TEST_CASE("field helpers") {
    PrimeField f(11);
    CHECK(f.reduce(-1) == 10);
    CHECK(f.centered(10) == -1);
    CHECK(f.pow(2, 10) == 1);
    CHECK(f.binomial(11, 1) == 0);
    CHECK(f.binomial(12, 1) == 1);  // Lucas: C(1,0) C(1,1)
    CHECK(is_prime(37));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("polynomial arithmetic") {
    const auto a = T(2, 23, "t1 + t2"), b = T(2, 23, "t1 - t2");
    CHECK(a * b == T(2, 23, "t1^2 - t2^2"));
    CHECK(T(2, 5, "t1 + t2").pow(5) == T(2, 5, "t1^5 + t2^5"));
    CHECK((a * GradedPoly(t_context(2), 23)).is_zero());
    CHECK((a - a).is_zero());
    CHECK(a.pow(0) == GradedPoly::constant(t_context(2), 23, 1));
}

TEST_CASE("context mismatch is rejected") {
    const auto a = T(2, 23, "t1");
    const auto b = T(3, 23, "t1");
    CHECK_THROWS_AS(a + b, ContextError);
    CHECK_THROWS_AS(a * b, ContextError);
    CHECK_THROWS_AS(a + T(2, 29, "t1"), ContextError);
}

TEST_CASE("terms are graded-lex descending and printing is stable") {
    const auto f = T(3, 7, "t3 + t1*t2 + t1^2 + 1");
    REQUIRE(f.size() == 4);
    CHECK(f.to_string() == "t1^2 + t1*t2 + t3 + 1");
    CHECK(f.max_degree() == 4);
    CHECK_FALSE(f.homogeneous_degree().has_value());
    CHECK(T(3, 7, "t1*t2 - t3^2").homogeneous_degree() == 4);
}

TEST_CASE("parser") {
    const auto ctx = make_context({"p1", "a2'", "c_8"}, {4, 8, 16});
    CHECK(parse_poly(ctx, 37, "5/36*p1^2").coefficient(Monomial{{2}}) == PrimeField(37).mul(5, PrimeField(37).inv(36)));
    CHECK(parse_poly(ctx, 37, "(p1 + a2')^2 - p1^2 - a2'^2") == parse_poly(ctx, 37, "2*p1*a2'"));
    CHECK(parse_poly(ctx, 37, "-c_8").to_string() == "-c_8");
    CHECK_THROWS_AS(parse_poly(ctx, 37, "p2"), ContextError);
    CHECK_THROWS_AS(parse_poly(ctx, 37, "p1 +"), ContextError);
    CHECK_THROWS_AS(parse_poly(ctx, 37, "p1/p1"), ContextError);
    CHECK_THROWS_AS(parse_poly(ctx, 37, "1/37"), ContextError);
}

TEST_CASE("steenrod P1 on generators and products") {
    CHECK(steenrod_p1(T(1, 11, "t1")) == T(1, 11, "t1^11"));
    CHECK(steenrod_p1(T(2, 13, "t1*t2")) == T(2, 13, "t1^13*t2 + t1*t2^13"));
    CHECK(steenrod_p1(GradedPoly::constant(t_context(2), 13, 5)).is_zero());
    CHECK(steenrod_p1(T(1, 7, "t1^2")) == T(1, 7, "2*t1^8"));
    CHECK_THROWS_AS(steenrod_p1(parse_poly(make_context({"x"}, {4}), 7, "x")), UnsupportedContext);
    CHECK_THROWS_AS(steenrod_p1(T(1, 2, "t1")), UnsupportedPrime);
}

TEST_CASE("quotient normal forms") {
    const auto q = e7_target();
    const auto& ctx = q.context();
    CHECK(q.normal_form(parse_poly(ctx, 23, "a4")) == parse_poly(ctx, 23, "21*a2^2"));
    CHECK(q.normal_form(parse_poly(ctx, 23, "a3^2")).is_zero());
    CHECK(q.normal_form(GradedPoly::constant(ctx, 23, 1)) == GradedPoly::constant(ctx, 23, 1));
    // a4 is eliminated; a4^2 = a2^4/144 and a2^3 = 0
    CHECK(q.normal_form(parse_poly(ctx, 23, "a4^2")).is_zero());
    const auto f = parse_poly(ctx, 23, "a4*b5 + a2*a3");
    CHECK(q.normal_form(q.normal_form(f)) == q.normal_form(f));
}

TEST_CASE("ring maps") {
    const auto src = make_context({"p1", "p2", "p3", "p4"}, {4, 8, 12, 16});
    const auto q = e7_target();
    const auto& tctx = q.context();
    RingMap pi(src, q,
               {{"p1", GradedPoly(tctx, 23)},
                {"p2", parse_poly(tctx, 23, "a2")},
                {"p3", parse_poly(tctx, 23, "a3")},
                {"p4", parse_poly(tctx, 23, "a4")}});
    CHECK(pi.apply(parse_poly(src, 23, "p1")).is_zero());
    CHECK(pi.apply(parse_poly(src, 23, "12*p4 + p2^2 - 1/2*p1^2*p2")).is_zero());
    CHECK(apply_ring_map(pi, parse_poly(src, 23, "p3")) == parse_poly(tctx, 23, "a3"));

    RingMap partial(src, q, {{"p1", GradedPoly(tctx, 23)}});
    CHECK_THROWS_AS(partial.apply(parse_poly(src, 23, "p2")), IncompleteMap);
    CHECK(partial.apply(parse_poly(src, 23, "p1^2 + 3")) == GradedPoly::constant(tctx, 23, 3));
}

TEST_CASE("identity map") {
    const auto ctx = make_context({"x", "y"}, {2, 4});
    QuotientPresentation free(ctx, 7, {}, {});
    RingMap id(ctx, free, {{"x", parse_poly(ctx, 7, "x")}, {"y", parse_poly(ctx, 7, "y")}});
    const auto f = parse_poly(ctx, 7, "3*x^5*y - y^2 + 1");
    CHECK(id.apply(f) == f);
}

TEST_CASE("solve_linear") {
    CHECK(solve_linear({T(1, 23, "t1")}, T(1, 23, "t1")).coefficients == std::vector<std::uint32_t>{1});
    CHECK(solve_linear({T(1, 23, "2*t1")}, T(1, 23, "t1")).coefficients == std::vector<std::uint32_t>{12});
    CHECK_THROWS_AS(solve_linear({T(2, 23, "t1")}, T(2, 23, "t2")), NotInSpan);
    const auto s = solve_linear({T(2, 5, "t1"), T(2, 5, "2*t1"), T(2, 5, "t2")}, T(2, 5, "t1 + t2"));
    CHECK_FALSE(s.unique());
    CHECK(s.kernel.size() == 1);
}

TEST_CASE("echelon basis") {
    EchelonBasis e(7);
    CHECK(e.insert({1, 2, 3}));
    CHECK(e.insert({0, 1, 1}));
    CHECK_FALSE(e.insert({2, 5, 7}));  // 2*(1,2,3) + (0,1,1)
    CHECK(e.rank() == 2);
    std::vector<std::uint32_t> v{1, 3, 4};
    e.reduce(v);
    CHECK(v == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("polynomial JSON round trip") {
    const auto f = T(2, 23, "t1*t2 - 3*t2^4");
    const auto j = to_json(f);
    CHECK(j["p"] == 23);
    CHECK(j["vars"] == nlohmann::json({"t1", "t2"}));
    CHECK(j["degrees"] == nlohmann::json({2, 2}));
    CHECK(j["terms"][0]["e"] == nlohmann::json({0, 4}));
    CHECK(j["terms"][0]["c"] == 20);
    CHECK(poly_from_json(j) == f);
    CHECK(j.dump() == to_json(poly_from_json(j)).dump());
}

TEST_CASE("serial and parallel kernels agree") {
    Sampler s(7);
    const std::uint32_t p = 31;
    const PrimeField field(p);
    const auto ctx = t_context(4);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = kernels::to_dense(s.homogeneous(ctx, p, 6, 40));
        const auto b = kernels::to_dense(s.homogeneous(ctx, p, 7, 40));
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(kernels::dense_mul_serial(a, b, p).c == kernels::dense_mul_parallel(a, b, p).c);
    }
    const auto g = build_coxeter_h(3, 11);
    const auto f = kernels::to_dense(Sampler(9).homogeneous(t_context(3), 11, 6, 10));
    CHECK(kernels::orbit_sum_serial(g.elements(), f, PrimeField(11)).c ==
          kernels::orbit_sum_parallel(g.elements(), f, PrimeField(11)).c);
}

TEST_CASE("dense forms round trip and index ranks") {
    const auto idx = kernels::homogeneous_index(3, 4);
    for (std::size_t i = 0; i < idx->size(); ++i) CHECK(idx->rank(idx->monomial(i)) == i);
    const auto f = T(3, 11, "t1^2*t3^2 - t2^4 + 5*t1*t2*t3^2");
    CHECK(kernels::from_dense(kernels::to_dense(f), t_context(3), 11) == f);
}
