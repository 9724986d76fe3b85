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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcheck/poly.hpp"
#include "nilcheck/reflection_group.hpp"

namespace nilcheck {

/// (1/|G|) sum_g f(g t).
GradedPoly reynolds(const ReflectionGroup& g, const GradedPoly& f);
/// True when f(g t) = f(t) for every generator g.
bool is_invariant(const ReflectionGroup& g, const GradedPoly& f);

/// Polynomial generators of an invariant ring, with their P^1 expansions computed on demand.
class GeneratorSet {
  public:
    GeneratorSet(std::shared_ptr<const ReflectionGroup> group, std::vector<GradedPoly> generators);

    const ReflectionGroup& group() const noexcept { return *group_; }
    std::shared_ptr<const ReflectionGroup> group_ptr() const noexcept { return group_; }
    const std::vector<GradedPoly>& generators() const noexcept { return gens_; }
    const std::vector<unsigned>& half_degrees() const noexcept { return degrees_; }
    std::size_t size() const noexcept { return gens_.size(); }
    /// F_p[x_{d_1}, ...] with |x_d| = 2d; names use x for I2, y for H3, z for H4.
    const ContextPtr& variables() const noexcept { return vars_; }
    const std::string& name(std::size_t i) const { return vars_->name(i); }

    /// P^1 of generator i written in the generators (cached, thread safe).
    const GradedPoly& p1_expansion(std::size_t i) const;

  private:
    std::shared_ptr<const ReflectionGroup> group_;
    std::vector<GradedPoly> gens_;
    std::vector<unsigned> degrees_;
    ContextPtr vars_;
    struct Cache {
        std::mutex mu;
        std::map<std::size_t, GradedPoly> p1;
    };
    std::shared_ptr<Cache> cache_;
};

/// Canonical generators: in each degree, the first monomial (graded-lex) whose orbit sum is
/// independent of products of earlier generators, reduced against them and made monic.
/// Throws DegreesMismatch when the degrees do not multiply to |G| or a degree has no new invariant.
GeneratorSet fundamental_invariants(std::shared_ptr<const ReflectionGroup> group, const std::vector<unsigned>& degrees);
GeneratorSet fundamental_invariants(const ReflectionGroup& group, const std::vector<unsigned>& degrees);

/// The unique Q with Q(generators) = f. Throws NotInSpan otherwise.
GradedPoly express_in_generators(const GeneratorSet& gs, const GradedPoly& f);

struct P1Entry {
    std::string generator;
    GradedPoly expansion;
};
std::vector<P1Entry> p1_report(const GeneratorSet& gs);

struct CoefficientWitness {
    std::string generator;  ///< whose P^1 is expanded
    std::string monomial;   ///< in the generator variables
    std::uint32_t coefficient;
};

struct ConditionVerdict {
    bool satisfied = false;
    std::vector<CoefficientWitness> witnesses;
};

/// P^1 x_1 = a x_i x_m + ... and P^1 x_m = b x_j x_k + ... with a, b nonzero.
/// Needs strictly increasing degrees starting at 2; throws Unsupported otherwise.
ConditionVerdict check_condition(const GeneratorSet& gs);

/// The case split for degrees (2, 12, 20, 30): b, c from P^1 z_2 = b z_2 z_30 + c z_12 z_20 + ...,
/// and d from P^1 z_20 = d z_20 z_30 + ..., evaluated only when b = 0.
struct H4CaseSplit {
    std::uint32_t b = 0;
    std::uint32_t c = 0;
    std::optional<std::uint32_t> d;
    bool satisfied() const noexcept { return (b != 0 || c != 0) && (b != 0 || (d && *d != 0)); }
};
H4CaseSplit h4_case_split(const GeneratorSet& gs);

/// Coefficient of the monomial prod x_i^e_i in f (f over the generator variables).
std::uint32_t generator_coefficient(const GeneratorSet& gs, const GradedPoly& f, const std::vector<std::pair<std::size_t, unsigned>>& powers);
/// Drops every monomial in the ideal generated by the given generator powers, e.g. {(0, 2), (1, 1)} for (x_1^2, x_2).
GradedPoly reduce_mod_monomials(const GradedPoly& f, const std::vector<std::pair<std::size_t, unsigned>>& ideal);

/// Dimension of the degree-d invariants, by ranking orbit sums of all monomials.
std::size_t invariant_dimension(const ReflectionGroup& g, unsigned d);
/// Coefficient of q^d in prod 1/(1 - q^{d_i}).
std::size_t hilbert_coefficient(const std::vector<unsigned>& degrees, unsigned d);

nlohmann::json to_json(const GeneratorSet& gs, bool with_p1);

}  // namespace nilcheck
