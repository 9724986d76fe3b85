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

#include "nilcheck/sampling.hpp"

namespace nilcheck {

std::uint32_t Sampler::element(std::uint32_t p) { return std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng_); }

std::uint32_t Sampler::nonzero(std::uint32_t p) { return std::uniform_int_distribution<std::uint32_t>(1, p - 1)(rng_); }

unsigned Sampler::below(unsigned bound) { return std::uniform_int_distribution<unsigned>(0, bound - 1)(rng_); }

GradedPoly Sampler::homogeneous(const ContextPtr& ctx, std::uint32_t p, unsigned degree, unsigned terms) {
    std::vector<GradedPoly::Term> out;
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m;
        for (unsigned d = 0; d < degree; ++d) ++m.e[below(static_cast<unsigned>(ctx->size()))];
        out.push_back({m, element(p)});
    }
    return GradedPoly::from_terms(ctx, p, std::move(out));
}

GradedPoly Sampler::polynomial(const ContextPtr& ctx, std::uint32_t p, unsigned max_degree, unsigned terms) {
    GradedPoly f(ctx, p);
    for (unsigned t = 0; t < terms; ++t) f += homogeneous(ctx, p, below(max_degree + 1), 1);
    return f;
}

Matrix Sampler::invertible(std::size_t n, std::uint32_t p) {
    for (;;) {
        Matrix m(n, p);
        for (auto& x : m.a) x = element(p);
        try {
            (void)inverse(m);
            return m;
        } catch (const NotInvertible&) {
        }
    }
}

}  // namespace nilcheck
