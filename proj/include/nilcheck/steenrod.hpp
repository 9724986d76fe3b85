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

#include "nilcheck/matrix.hpp"
#include "nilcheck/poly.hpp"

namespace nilcheck {

/// The Steenrod operation P^1 on F_p[t_1, ..., t_n] with |t_i| = 2.
///
/// On generators P^1 t = t^p; on products it is the derivation
/// P^1(fg) = P^1(f) g + f P^1(g), so P^1(t^e) = sum_i e_i t^(e + (p-1) delta_i).
/// Throws UnsupportedContext if a variable has degree other than 2, and
/// UnsupportedPrime for p = 2.
GradedPoly steenrod_p1(const GradedPoly& f);
GradedPoly steenrod_p1(const GradedPoly& f, std::uint32_t p);

/// Linear substitution t_i -> sum_j M(i, j) t_j on a polynomial in degree-2 variables.
GradedPoly apply_matrix(const GradedPoly& f, const Matrix& m);

}  // namespace nilcheck
