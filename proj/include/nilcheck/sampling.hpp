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
#include <random>

#include "nilcheck/matrix.hpp"
#include "nilcheck/poly.hpp"

namespace nilcheck {

/// Random instances for property checks; deterministic for a given seed.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint32_t element(std::uint32_t p);
    std::uint32_t nonzero(std::uint32_t p);
    unsigned below(unsigned bound);
    /// Up to `terms` monomials, each with exponents summing to `degree`; possibly zero.
    GradedPoly homogeneous(const ContextPtr& ctx, std::uint32_t p, unsigned degree, unsigned terms);
    /// Up to `terms` monomials with exponent sums at most `max_degree`.
    GradedPoly polynomial(const ContextPtr& ctx, std::uint32_t p, unsigned max_degree, unsigned terms);
    Matrix invertible(std::size_t n, std::uint32_t p);

  private:
    std::mt19937_64 rng_;
};

}  // namespace nilcheck
