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
#include "nilcheck/cohomology.hpp"
#include "nilcheck/symmetric.hpp"

using namespace nilcheck;

namespace {

void require_all(const Report& r) {
    for (const auto& c : r.checks) {
        INFO(c.name << ": expected " << c.expected << ", computed " << c.computed);
        CHECK(c.pass);
    }
    CHECK_NOTHROW(r.require_pass());
}

}  // namespace

TEST_CASE("restriction images have the generator degrees") {
    for (const auto& data : {e7_restriction(), e8_restriction()})
        for (const auto& [name, degree] : data.degrees) CHECK(data.image(name).homogeneous_degree() == degree);
    CHECK_THROWS_AS(e7_restriction().image("y4"), IndexError);
}

TEST_CASE("E7 map values") {
    const auto pi = e7_pi();
    const auto& tctx = pi.target().context();
    CHECK(pi.target().normal_form(parse_poly(tctx, 23, "a4")) == parse_poly(tctx, 23, "21*a2^2"));
    CHECK(pi.apply(parse_poly(e7_restriction().ring, 23, "p1")).is_zero());
    // the y14 y10 vanishing holds for every value of the parameters a, b
    const auto data = e7_restriction();
    const auto prod = pi.apply(data.image("y14") * data.image("y10"));
    CHECK(prod.is_zero());
}

TEST_CASE("E7 suite") { require_all(verify_e7()); }

TEST_CASE("E8 pi suite") {
    const auto r = verify_e8_pi();
    require_all(r);
    CHECK(r.checks.size() >= 20);
}

TEST_CASE("E8 phi suite") { require_all(verify_e8_phi()); }

TEST_CASE("phi data") {
    const auto phi = e8_phi();
    const auto& c = phi.c_ring;
    for (unsigned k = 2; k <= 7; ++k)
        CHECK((GradedPoly::variable(c, 37, 0) * phi.h[k]).homogeneous_degree() == static_cast<int>(4 * k));
    CHECK(phi.p_in_c(1) == parse_poly(c, 37, "c1^2 - 2*c2"));
    CHECK(phi.to_c_ring(parse_poly(pc_context(8), 37, "c8")) == parse_poly(c, 37, "c8"));
    // phi(c2) = c2 and phi(p1) = p1
    CHECK(phi.apply(parse_poly(pc_context(8), 37, "p1")) == phi.p_in_c(1));
    CHECK(reduce_mod_c1_c2(parse_poly(c, 37, "c1^2 + c1*c2 + c2^2 + c3"), 2, 2) == parse_poly(c, 37, "c1*c2 + c3"));
}

TEST_CASE("report JSON carries name, expected, computed and pass") {
    const auto j = to_json(verify_e7());
    REQUIRE(j["checks"].size() > 0);
    const auto& c = j["checks"][0];
    CHECK(c.contains("name"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("computed"));
    CHECK(c["pass"] == true);
    CHECK(j["pass"] == true);
}
