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

#include "nilcheck/steenrod.hpp"

#include <map>

#include "nilcheck/kernels.hpp"

namespace nilcheck {

GradedPoly steenrod_p1(const GradedPoly& f) {
    const std::uint32_t p = f.prime();
    if (p == 2) throw UnsupportedPrime("P^1 is implemented for odd primes only");
    const auto& ctx = *f.context();
    if (!ctx.all_degree(2)) throw UnsupportedContext("P^1 needs every variable in degree 2");
    std::vector<GradedPoly::Term> out;
    out.reserve(f.size() * ctx.size());
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            unsigned e = t.mono.e[i];
            if (e == 0 || e % p == 0) continue;
            Monomial m = t.mono;
            unsigned raised = e + p - 1;
            if (raised > 255) throw ContextError("exponent overflow in P^1");
            m.e[i] = static_cast<std::uint8_t>(raised);
            out.push_back({m, static_cast<std::uint32_t>(std::uint64_t(t.coeff) * (e % p) % p)});
        }
    }
    return GradedPoly::from_terms(f.context(), p, std::move(out));
}

GradedPoly steenrod_p1(const GradedPoly& f, std::uint32_t p) {
    if (p != f.prime()) throw ContextError("P^1 requested at a prime different from the coefficient field");
    return steenrod_p1(f);
}

GradedPoly apply_matrix(const GradedPoly& f, const Matrix& m) {
    const auto& ctx = f.context();
    if (!ctx->all_degree(2)) throw UnsupportedContext("linear substitution needs degree-2 variables");
    if (m.n != ctx->size() || m.p != f.prime()) throw ContextError("matrix does not match the polynomial ring");
    PrimeField field(f.prime());
    std::map<unsigned, GradedPoly> parts;
    for (const auto& t : f.terms()) {
        unsigned d = t.mono.total();
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, GradedPoly(ctx, f.prime())).first;
        it->second += GradedPoly::monomial(ctx, f.prime(), t.mono, t.coeff);
    }
    GradedPoly out(ctx, f.prime());
    for (auto& [d, part] : parts) {
        if (d == 0) {
            out += part;
            continue;
        }
        out += kernels::from_dense(kernels::substitute_linear(kernels::to_dense(part), m, field), ctx, f.prime());
    }
    return out;
}

}  // namespace nilcheck
