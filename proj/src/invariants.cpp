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

#include "nilcheck/invariants.hpp"

#include <algorithm>
#include <functional>

#include "nilcheck/kernels.hpp"
#include "nilcheck/linalg.hpp"
#include "nilcheck/poly_json.hpp"
#include "nilcheck/steenrod.hpp"

namespace nilcheck {

namespace {

std::map<unsigned, GradedPoly> split_by_total_degree(const GradedPoly& f) {
    std::map<unsigned, std::vector<GradedPoly::Term>> parts;
    for (const auto& t : f.terms()) parts[t.mono.total()].push_back(t);
    std::map<unsigned, GradedPoly> out;
    for (auto& [d, terms] : parts) out.emplace(d, GradedPoly::from_terms(f.context(), f.prime(), std::move(terms)));
    return out;
}

char prefix_for(GroupFamily family) {
    switch (family) {
        case GroupFamily::h3: return 'y';
        case GroupFamily::h4: return 'z';
        default: return 'x';
    }
}

// Calls visit(exponents, product) for every product of generators of total polynomial degree d.
void for_each_product(const std::vector<GradedPoly>& gens, const std::vector<unsigned>& degrees, unsigned d,
                      const ContextPtr& ctx, std::uint32_t p,
                      const std::function<void(const std::vector<unsigned>&, const GradedPoly&)>& visit) {
    std::vector<unsigned> exps(gens.size(), 0);
    std::vector<std::vector<GradedPoly>> powers(gens.size());
    auto power = [&](std::size_t j, unsigned e) -> const GradedPoly& {
        auto& pw = powers[j];
        if (pw.empty()) pw.push_back(GradedPoly::constant(ctx, p, 1));
        while (pw.size() <= e) pw.push_back(pw.back() * gens[j]);
        return pw[e];
    };
    auto rec = [&](auto&& self, std::size_t j, unsigned left, const GradedPoly& partial) -> void {
        if (j == gens.size()) {
            if (left == 0) visit(exps, partial);
            return;
        }
        for (unsigned e = 0; e * degrees[j] <= left; ++e) {
            exps[j] = e;
            if (e == 0)
                self(self, j + 1, left, partial);
            else
                self(self, j + 1, left - e * degrees[j], partial * power(j, e));
        }
        exps[j] = 0;
    };
    rec(rec, 0, d, GradedPoly::constant(ctx, p, 1));
}

}  // namespace

GradedPoly reynolds(const ReflectionGroup& g, const GradedPoly& f) {
    if (!same_context(f.context(), t_context(g.dimension())) || f.prime() != g.prime())
        throw ContextError("Reynolds operator: polynomial does not live in the group's t-ring");
    PrimeField field(g.prime());
    const auto scale = field.inv(static_cast<std::uint32_t>(g.order() % g.prime()));
    GradedPoly out(f.context(), f.prime());
    for (const auto& [d, part] : split_by_total_degree(f)) {
        if (d == 0) {
            out += part;
            continue;
        }
        auto sum = kernels::orbit_sum_parallel(g.elements(), kernels::to_dense(part), field);
        out += kernels::from_dense(sum, f.context(), f.prime()).scaled_raw(scale);
    }
    return out;
}

bool is_invariant(const ReflectionGroup& g, const GradedPoly& f) {
    for (const auto& m : g.generators())
        if (!(apply_matrix(f, m) == f)) return false;
    return true;
}

GeneratorSet::GeneratorSet(std::shared_ptr<const ReflectionGroup> group, std::vector<GradedPoly> generators)
    : group_(std::move(group)), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (!group_) throw ContextError("generator set without a group");
    auto ctx = t_context(group_->dimension());
    std::vector<std::string> names;
    std::vector<int> cdeg;
    const char prefix = prefix_for(group_->family());
    for (const auto& g : gens_) {
        if (!same_context(g.context(), ctx) || g.prime() != group_->prime())
            throw ContextError("generator does not live in the group's t-ring");
        if (g.is_zero() || !g.is_homogeneous()) throw NotInvariant("generators must be nonzero and homogeneous");
        const unsigned d = g.leading().mono.total();
        degrees_.push_back(d);
        std::string name = prefix + std::to_string(d);
        while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
        names.push_back(name);
        cdeg.push_back(static_cast<int>(2 * d));
    }
    vars_ = make_context(std::move(names), std::move(cdeg));
}

const GradedPoly& GeneratorSet::p1_expansion(std::size_t i) const {
    if (i >= gens_.size()) throw IndexError("generator index out of range");
    std::lock_guard lock(cache_->mu);
    auto it = cache_->p1.find(i);
    if (it == cache_->p1.end()) it = cache_->p1.emplace(i, express_in_generators(*this, steenrod_p1(gens_[i]))).first;
    return it->second;
}

GeneratorSet fundamental_invariants(std::shared_ptr<const ReflectionGroup> group, const std::vector<unsigned>& degrees) {
    if (degrees.empty() || degrees.size() != group->dimension())
        throw DegreesMismatch("need one degree per variable");
    if (!std::is_sorted(degrees.begin(), degrees.end()) || degrees.front() == 0)
        throw DegreesMismatch("degrees must be positive and ascending");
    std::size_t product = 1;
    for (auto d : degrees) product *= d;
    if (product != group->order())
        throw DegreesMismatch("degree product " + std::to_string(product) + " differs from |G| = " +
                              std::to_string(group->order()));
    const auto n = group->dimension();
    const auto p = group->prime();
    auto ctx = t_context(n);
    PrimeField field(p);
    std::vector<GradedPoly> gens;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        const unsigned d = degrees[k];
        EchelonBasis decomposables(p);
        std::vector<unsigned> earlier(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(k));
        for_each_product(gens, earlier, d, ctx, p, [&](const std::vector<unsigned>& e, const GradedPoly& prod) {
            if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; })) return;
            if (!prod.is_zero()) decomposables.insert(kernels::to_dense(prod).c);
        });
        auto index = kernels::homogeneous_index(n, d);
        bool found = false;
        for (std::size_t r = 0; r < index->size() && !found; ++r) {
            auto single = kernels::DenseForm::zero(n, d);
            single.c[r] = 1;
            auto sum = kernels::orbit_sum_parallel(group->elements(), single, field);
            if (sum.is_zero()) continue;
            decomposables.reduce(sum.c);
            auto lead = std::find_if(sum.c.begin(), sum.c.end(), [](std::uint32_t x) { return x != 0; });
            if (lead == sum.c.end()) continue;
            const auto s = field.inv(*lead);
            for (auto& x : sum.c) x = field.mul(x, s);
            gens.push_back(kernels::from_dense(sum, ctx, p));
            found = true;
        }
        if (!found) throw DegreesMismatch("no indecomposable invariant in degree " + std::to_string(d));
    }
    return GeneratorSet(std::move(group), std::move(gens));
}

GeneratorSet fundamental_invariants(const ReflectionGroup& group, const std::vector<unsigned>& degrees) {
    return fundamental_invariants(std::make_shared<const ReflectionGroup>(group), degrees);
}

GradedPoly express_in_generators(const GeneratorSet& gs, const GradedPoly& f) {
    const auto& vars = gs.variables();
    const auto p = gs.group().prime();
    auto ctx = t_context(gs.group().dimension());
    if (!same_context(f.context(), ctx) || f.prime() != p) throw ContextError("polynomial is not in the group's t-ring");
    std::vector<GradedPoly::Term> out;
    for (const auto& [d, part] : split_by_total_degree(f)) {
        std::vector<GradedPoly> columns;
        std::vector<Monomial> labels;
        for_each_product(gs.generators(), gs.half_degrees(), d, ctx, p,
                         [&](const std::vector<unsigned>& e, const GradedPoly& prod) {
                             Monomial m;
                             for (std::size_t i = 0; i < e.size(); ++i) m.e[i] = static_cast<std::uint8_t>(e[i]);
                             labels.push_back(m);
                             columns.push_back(prod);
                         });
        if (columns.empty()) throw NotInSpan("no generator monomial has degree " + std::to_string(d));
        auto sol = solve_linear(columns, part);
        if (!sol.unique()) throw NotInSpan("generators are not algebraically independent in degree " + std::to_string(d));
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (sol.coefficients[i]) out.push_back({labels[i], sol.coefficients[i]});
    }
    return GradedPoly::from_terms(vars, p, std::move(out));
}

std::vector<P1Entry> p1_report(const GeneratorSet& gs) {
    std::vector<P1Entry> out;
    for (std::size_t i = 0; i < gs.size(); ++i) out.push_back({gs.name(i), gs.p1_expansion(i)});
    return out;
}

namespace {

std::vector<std::size_t> factors_of(const Monomial& m, std::size_t n) {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned k = 0; k < m.e[i]; ++k) f.push_back(i);
    return f;
}

}  // namespace

ConditionVerdict check_condition(const GeneratorSet& gs) {
    const auto& deg = gs.half_degrees();
    if (deg.size() < 2 || deg.front() != 2 || std::adjacent_find(deg.begin(), deg.end(), std::greater_equal<>()) != deg.end())
        throw Unsupported("the criterion needs strictly increasing degrees starting at 2");
    const auto n = gs.size();
    const auto& vars = gs.variables();
    const auto p = gs.group().prime();
    auto witness = [&](std::size_t gen, const GradedPoly::Term& t) {
        return CoefficientWitness{gs.name(gen), GradedPoly::monomial(vars, p, t.mono).to_string(), t.coeff};
    };
    const auto& first = gs.p1_expansion(0);
    std::vector<const GradedPoly::Term*> quadratics;
    for (const auto& t : first.terms())
        if (t.mono.total() == 2) quadratics.push_back(&t);
    // products involving the top generator first
    std::stable_partition(quadratics.begin(), quadratics.end(), [&](const GradedPoly::Term* t) { return t->mono.e[n - 1] > 0; });
    ConditionVerdict v;
    for (const auto* q : quadratics) {
        auto f = factors_of(q->mono, n);
        std::vector<std::size_t> targets{f[1]};
        if (f[0] != f[1]) targets.push_back(f[0]);
        for (auto t : targets) {
            for (const auto& u : gs.p1_expansion(t).terms()) {
                if (u.mono.total() != 2) continue;
                v.satisfied = true;
                v.witnesses = {witness(0, *q), witness(t, u)};
                return v;
            }
        }
    }
    return v;
}

std::uint32_t generator_coefficient(const GeneratorSet& gs, const GradedPoly& f,
                                    const std::vector<std::pair<std::size_t, unsigned>>& powers) {
    if (!same_context(f.context(), gs.variables())) throw ContextError("polynomial is not in the generator ring");
    Monomial m;
    for (auto [i, e] : powers) m.e.at(i) = static_cast<std::uint8_t>(e);
    return f.coefficient(m);
}

GradedPoly reduce_mod_monomials(const GradedPoly& f, const std::vector<std::pair<std::size_t, unsigned>>& ideal) {
    return f.filter([&](const Monomial& m) {
        for (auto [i, k] : ideal)
            if (m.e[i] >= k) return false;
        return true;
    });
}

H4CaseSplit h4_case_split(const GeneratorSet& gs) {
    if (gs.half_degrees() != std::vector<unsigned>{2, 12, 20, 30}) throw Unsupported("case split needs degrees (2,12,20,30)");
    H4CaseSplit s;
    const auto& pz2 = gs.p1_expansion(0);
    s.b = generator_coefficient(gs, pz2, {{0, 1}, {3, 1}});
    s.c = generator_coefficient(gs, pz2, {{1, 1}, {2, 1}});
    if (s.b == 0) s.d = generator_coefficient(gs, gs.p1_expansion(2), {{2, 1}, {3, 1}});
    return s;
}

std::size_t invariant_dimension(const ReflectionGroup& g, unsigned d) {
    const auto n = g.dimension();
    PrimeField field(g.prime());
    auto index = kernels::homogeneous_index(n, d);
    EchelonBasis basis(g.prime());
    for (std::size_t r = 0; r < index->size(); ++r) {
        auto single = kernels::DenseForm::zero(n, d);
        single.c[r] = 1;
        basis.insert(kernels::orbit_sum_parallel(g.elements(), single, field).c);
    }
    return basis.rank();
}

std::size_t hilbert_coefficient(const std::vector<unsigned>& degrees, unsigned d) {
    std::vector<std::size_t> ways(d + 1, 0);
    ways[0] = 1;
    for (auto k : degrees)
        for (unsigned s = k; s <= d; ++s) ways[s] += ways[s - k];
    return ways[d];
}

nlohmann::json to_json(const GeneratorSet& gs, bool with_p1) {
    nlohmann::json j;
    j["group"] = gs.group().label();
    j["p"] = gs.group().prime();
    j["order"] = gs.group().order();
    j["degrees"] = gs.half_degrees();
    j["generators"] = nlohmann::json::array();
    for (std::size_t i = 0; i < gs.size(); ++i)
        j["generators"].push_back({{"name", gs.name(i)}, {"poly", to_json(gs.generators()[i])}});
    if (with_p1) {
        j["p1"] = nlohmann::json::array();
        for (const auto& e : p1_report(gs))
            j["p1"].push_back({{"generator", e.generator}, {"text", e.expansion.to_string()}, {"expansion", to_json(e.expansion)}});
    }
    return j;
}

}  // namespace nilcheck
