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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcheck/poly.hpp"

namespace nilcheck {

/// A quotient F_p[vars] / I where I is generated by
///   - eliminations v - rhs(v), with rhs free of eliminated variables, and
///   - truncations v^k for nilpotency bounds.
///
/// The normal form substitutes every eliminated variable and then drops every monomial that
/// violates a bound. The constructor rejects presentations for which that is not canonical:
/// an eliminated variable's own bound k must already hold, i.e. nf(rhs^k) = 0.
class QuotientPresentation {
  public:
    QuotientPresentation(ContextPtr ctx, std::uint32_t p, std::map<std::string, GradedPoly> eliminations,
                         std::map<std::string, unsigned> nilpotency_bounds);

    /// Builds eliminations from relations r = 0 of the form c*v + rest with c invertible and v absent from rest.
    /// The eliminated variable is the one in the graded-lex leading term if it qualifies, otherwise the
    /// first qualifying variable in context order.
    static QuotientPresentation from_relations(ContextPtr ctx, std::uint32_t p, const std::vector<GradedPoly>& relations,
                                               std::map<std::string, unsigned> nilpotency_bounds);

    const ContextPtr& context() const noexcept { return ctx_; }
    std::uint32_t prime() const noexcept { return p_; }
    bool is_eliminated(std::size_t var) const noexcept { return elim_[var].has_value(); }
    const std::optional<GradedPoly>& elimination(std::size_t var) const { return elim_.at(var); }
    unsigned bound(std::size_t var) const noexcept { return bound_[var]; }

    GradedPoly normal_form(const GradedPoly& f) const;
    /// nf(nf(a) * nf(b)) computed with truncation during the product.
    GradedPoly multiply(const GradedPoly& a, const GradedPoly& b) const;
    bool survives(const Monomial& m) const noexcept;

  private:
    ContextPtr ctx_;
    std::uint32_t p_;
    std::vector<std::optional<GradedPoly>> elim_;
    std::vector<unsigned> bound_;  // 0 = unbounded

    GradedPoly truncate(const GradedPoly& f) const;
};

/// Ring homomorphism from F_p[source] into a quotient ring, given by the images of the source variables.
class RingMap {
  public:
    RingMap(ContextPtr source, QuotientPresentation target, std::map<std::string, GradedPoly> images);

    const ContextPtr& source() const noexcept { return source_; }
    const QuotientPresentation& target() const noexcept { return target_; }

    /// Substitutes images and reduces; throws IncompleteMap when f uses a variable without an image.
    GradedPoly apply(const GradedPoly& f) const;

  private:
    ContextPtr source_;
    QuotientPresentation target_;
    std::vector<std::optional<GradedPoly>> images_;
};

GradedPoly normal_form(const QuotientPresentation& q, const GradedPoly& f);
GradedPoly apply_ring_map(const RingMap& m, const GradedPoly& f);

}  // namespace nilcheck
