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

#include <cstdint>

#include "nilcheck/poly.hpp"

namespace nilcheck {

enum class SymmetricKind {
    elementary,  ///< c_k: 1 + c_1 + ... + c_n = prod (1 + t_i)
    pontryagin,  ///< p_k: 1 - p_1 + ... + (-1)^n p_n = prod (1 - t_i^2)
    power_sum,   ///< s_k = t_1^{2k} + ... + t_n^{2k}
};

struct SymmetricBasisElement {
    SymmetricKind kind;
    unsigned index;
    unsigned arity;
};

/// Explicit polynomial in t_1..t_n. Throws IndexError for an index outside the valid range.
GradedPoly expand(const SymmetricBasisElement& elem, std::uint32_t p);
GradedPoly elementary_class(unsigned k, unsigned n, std::uint32_t p);
GradedPoly pontryagin_class(unsigned k, unsigned n, std::uint32_t p);
GradedPoly power_sum(unsigned k, unsigned n, std::uint32_t p);

/// p1, ..., pn with |p_k| = 4k.
ContextPtr pontryagin_context(unsigned n);
/// p1, ..., p(n-1), cn: the basis of polynomials invariant under permutations and even sign changes.
ContextPtr pc_context(unsigned n);

/// s_k as a polynomial in p_1..p_n, from the closed form of the Newton identities.
/// Needs k < p so that the factorial denominators are units.
GradedPoly girard_expand(unsigned k, unsigned n, std::uint32_t p);

/// Rewrites f in F_p[t_1..t_n] as A + c_n B with A, B polynomials in p_1..p_{n-1} and p_n = c_n^2.
/// Throws NotInvariant if f is not invariant under permutations and even sign changes.
GradedPoly to_pc_basis(const GradedPoly& f, unsigned n);
/// Inverse direction: substitutes the t-expansions of p_k and c_n.
GradedPoly from_pc_basis(const GradedPoly& g);

/// P^1 s_k = 2k s_{k + (p-1)/2}, as a polynomial in t.
GradedPoly p1_power_sum(unsigned k, unsigned n, std::uint32_t p);

/// P^1 on the invariant ring F_p[p_1..p_{n-1}, c_n], computed through the t-ring.
GradedPoly pc_steenrod_p1(const GradedPoly& g);

}  // namespace nilcheck
