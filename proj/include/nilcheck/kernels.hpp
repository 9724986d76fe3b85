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

// Data-parallel inner loops. Every parallel kernel has a serial twin with identical output;
// the serial versions are the test oracles and the benchmark baseline.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "nilcheck/fp.hpp"
#include "nilcheck/matrix.hpp"
#include "nilcheck/poly.hpp"

namespace nilcheck::kernels {

/// All monomials of total degree d in n variables, in descending lexicographic order.
class HomogeneousIndex {
  public:
    HomogeneousIndex(std::size_t n, unsigned d);

    std::size_t vars() const noexcept { return n_; }
    unsigned degree() const noexcept { return d_; }
    std::size_t size() const noexcept { return monos_.size(); }
    const Monomial& monomial(std::size_t i) const { return monos_[i]; }
    std::size_t rank(const Monomial& m) const noexcept;

  private:
    std::size_t n_;
    unsigned d_;
    std::vector<Monomial> monos_;
    // count_[k][m]: number of monomials of degree m in k variables
    std::vector<std::vector<std::size_t>> count_;
};

/// Shared, lazily built index (thread safe).
std::shared_ptr<const HomogeneousIndex> homogeneous_index(std::size_t n, unsigned d);

/// Dense coefficient vector of a form of total degree `degree` in `vars` variables.
struct DenseForm {
    std::size_t vars = 0;
    unsigned degree = 0;
    std::vector<std::uint32_t> c;

    static DenseForm zero(std::size_t vars, unsigned degree);
    bool is_zero() const noexcept;
};

DenseForm to_dense(const GradedPoly& f);
GradedPoly from_dense(const DenseForm& f, const ContextPtr& ctx, std::uint32_t p);

DenseForm dense_mul_serial(const DenseForm& a, const DenseForm& b, std::uint32_t p);
DenseForm dense_mul_parallel(const DenseForm& a, const DenseForm& b, std::uint32_t p);

/// (sum_i lin[i] t_i)^m, expanded with multinomial coefficients.
DenseForm linear_form_power(std::span<const std::uint32_t> lin, unsigned m, const PrimeField& field);

/// f(M t) where (M t)_i = sum_j M(i, j) t_j.
DenseForm substitute_linear(const DenseForm& f, const Matrix& m, const PrimeField& field);

/// Sum over g of f(g t); not yet divided by the group order.
DenseForm orbit_sum_serial(const std::vector<Matrix>& group, const DenseForm& f, const PrimeField& field);
DenseForm orbit_sum_parallel(const std::vector<Matrix>& group, const DenseForm& f, const PrimeField& field);

}  // namespace nilcheck::kernels
