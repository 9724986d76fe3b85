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
#include <optional>
#include <string>
#include <vector>

#include "nilcheck/matrix.hpp"

namespace nilcheck {

enum class GroupFamily { dihedral, h3, h4, custom };

/// Closes a set of invertible matrices under multiplication (breadth first from the identity).
/// Throws RepresentationError once more than `limit` elements appear.
std::vector<Matrix> close_group(const std::vector<Matrix>& generators, std::size_t limit);

/// Smallest r in [0, p) with r^2 = a mod p, if any.
std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p);
/// Smallest element of multiplicative order exactly n in F_p^*, if any.
std::optional<std::uint32_t> primitive_root_of_unity(unsigned n, std::uint32_t p);

/// A finite group of n x n matrices over F_p acting on t_1..t_n by t_i -> sum_j g(i,j) t_j.
class ReflectionGroup {
  public:
    ReflectionGroup(std::uint32_t p, std::vector<Matrix> generators, GroupFamily family, std::string label,
                    std::size_t expected_order = 0);

    std::uint32_t prime() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return dim_; }
    const std::vector<Matrix>& generators() const noexcept { return gens_; }
    const std::vector<Matrix>& elements() const noexcept { return elems_; }
    std::size_t order() const noexcept { return elems_.size(); }
    GroupFamily family() const noexcept { return family_; }
    const std::string& label() const noexcept { return label_; }

  private:
    std::uint32_t p_;
    std::size_t dim_;
    std::vector<Matrix> gens_;
    std::vector<Matrix> elems_;
    GroupFamily family_;
    std::string label_;
};

/// I_2(n) in the eigenbasis: diag(z, z^-1) for the smallest primitive n-th root z, and the swap.
ReflectionGroup build_dihedral(unsigned n, std::uint32_t p);
/// H_3 or H_4 from the Coxeter matrix with the smallest square root of 5.
ReflectionGroup build_coxeter_h(unsigned rank, std::uint32_t p);

}  // namespace nilcheck
