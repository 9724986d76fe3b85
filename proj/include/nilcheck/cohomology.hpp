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
#include <utility>
#include <vector>

#include "nilcheck/quotient.hpp"
#include "nilcheck/report.hpp"

namespace nilcheck {

/// Images of cohomology generators of BE_7 (BE_8) in H^*(BSpin(10)) (H^*(BSpin(16))),
/// over p1..p(n-1), cn plus the degree-0 parameters a, b where they occur.
struct RestrictionData {
    std::string name;
    unsigned spin_arity = 0;
    std::uint32_t p = 0;
    ContextPtr ring;
    std::vector<std::pair<std::string, GradedPoly>> images;
    /// Cohomological degree 2i of the generator named like "y14".
    std::vector<std::pair<std::string, int>> degrees;

    const GradedPoly& image(const std::string& generator) const;
};

RestrictionData e7_restriction();
RestrictionData e8_restriction();

RingMap e7_pi();
RingMap e7_pi_prime();
RingMap e8_pi();
RingMap e8_pi_prime();

/// The truncated action of the extra Weyl group element on F_37[c1..c8]:
/// exact on c1, c2, c8 and p1, and p_i -> p_i + c1 h_i modulo (c1^2).
struct PhiData {
    std::uint32_t p = 37;
    ContextPtr c_ring;
    std::vector<GradedPoly> h;  ///< h[i] for p_i, i = 0..7 (h[0], h[1] zero)
    GradedPoly c8_image;

    /// p_k written in the c_i through prod(1 - t_i^2) = prod(1 - t_i) prod(1 + t_i).
    GradedPoly p_in_c(unsigned k) const;
    /// f over p1..p7, c8 rewritten in the c_i.
    GradedPoly to_c_ring(const GradedPoly& f) const;
    /// phi(f) for f over p1..p7, c8; exact modulo (c1^2).
    GradedPoly apply(const GradedPoly& f) const;
};

PhiData e8_phi();

/// Drops monomials divisible by c1^a or c2^b (b = 0 keeps all powers of c2).
GradedPoly reduce_mod_c1_c2(const GradedPoly& f, unsigned c1_power, unsigned c2_power);

Report verify_e7();
Report verify_e8_pi();
Report verify_e8_phi();

}  // namespace nilcheck
