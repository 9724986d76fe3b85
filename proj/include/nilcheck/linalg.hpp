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
#include <vector>

#include "nilcheck/poly.hpp"

namespace nilcheck {

struct LinearSolution {
    /// A particular solution; the unique one when kernel is empty.
    std::vector<std::uint32_t> coefficients;
    /// Basis of {c : sum c_i columns_i = 0}.
    std::vector<std::vector<std::uint32_t>> kernel;

    bool unique() const noexcept { return kernel.empty(); }
};

/// Solves sum_i c_i * columns[i] = target over F_p. Throws NotInSpan when no solution exists.
LinearSolution solve_linear(const std::vector<GradedPoly>& columns, const GradedPoly& target);

/// Incremental row-echelon basis of a subspace of F_p^N, stored as sparse rows keyed by pivot.
class EchelonBasis {
  public:
    explicit EchelonBasis(std::uint32_t p) : p_(p) {}

    /// Reduces v against the basis in place (full reduction at every pivot).
    void reduce(std::vector<std::uint32_t>& v) const;
    /// Adds v if independent; returns false when v lies in the span.
    bool insert(std::vector<std::uint32_t> v);
    std::size_t rank() const noexcept { return rows_.size(); }

  private:
    std::uint32_t p_;
    // each row has leading entry 1 at its pivot and zeros at every other stored pivot
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> rows_;
};

}  // namespace nilcheck
