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

#include <optional>
#include <string>
#include <vector>

#include "nilcheck/matrix.hpp"

namespace nilcheck {

/// A finite matrix group with a distinguished generating set.
class FiniteGroupHandle {
  public:
    FiniteGroupHandle(std::string name, std::vector<Matrix> generators);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Matrix>& generators() const noexcept { return gens_; }
    const std::vector<Matrix>& elements() const noexcept { return elems_; }
    std::size_t order() const noexcept { return elems_.size(); }

  private:
    std::string name_;
    std::vector<Matrix> gens_;
    std::vector<Matrix> elems_;
};

/// x y x^-1 y^-1
Matrix commutator(const Matrix& x, const Matrix& y);

/// Least k >= 1 such that every iterated commutator [y_1, [y_2, ... [y_k, y_{k+1}]]] is trivial,
/// searching k <= k_max; nullopt means not nilpotent of class <= k_max.
/// This version lets every y_i range over the whole group.
std::optional<unsigned> nilpotency_class_oracle(const FiniteGroupHandle& g, unsigned k_max);
/// Same answer with the y_i restricted to generators and their inverses.
std::optional<unsigned> nilpotency_class(const FiniteGroupHandle& g, unsigned k_max);

/// abelian, dihedral8, dihedral16, heisenberg3, s4.
FiniteGroupHandle named_group(const std::string& name);
std::vector<std::string> named_groups();

}  // namespace nilcheck
