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

#include "nilcheck/quotient.hpp"

#include <unordered_map>

namespace nilcheck {

QuotientPresentation::QuotientPresentation(ContextPtr ctx, std::uint32_t p, std::map<std::string, GradedPoly> eliminations,
                                           std::map<std::string, unsigned> nilpotency_bounds)
    : ctx_(std::move(ctx)), p_(p), elim_(ctx_->size()), bound_(ctx_->size(), 0) {
    for (auto& [name, k] : nilpotency_bounds) {
        if (k == 0) throw PresentationError("nilpotency bound for " + name + " must be positive");
        bound_[ctx_->require(name)] = k;
    }
    for (auto& [name, rhs] : eliminations) {
        if (!same_context(rhs.context(), ctx_) || rhs.prime() != p_)
            throw PresentationError("elimination for " + name + " lives in another ring");
        elim_[ctx_->require(name)] = rhs.embed(ctx_);
    }
    for (std::size_t v = 0; v < elim_.size(); ++v) {
        if (!elim_[v]) continue;
        for (const auto& t : elim_[v]->terms())
            for (std::size_t w = 0; w < elim_.size(); ++w)
                if (t.mono.e[w] && elim_[w])
                    throw PresentationError("elimination for " + ctx_->name(v) + " mentions eliminated " + ctx_->name(w));
        const auto dv = ctx_->degree(v);
        if (auto d = elim_[v]->homogeneous_degree(); d && *d != dv)
            throw PresentationError("elimination for " + ctx_->name(v) + " is not of the variable's degree");
    }
    // bounds on eliminated variables must be consequences of the remaining truncations
    for (std::size_t v = 0; v < elim_.size(); ++v) {
        if (!elim_[v] || bound_[v] == 0) continue;
        GradedPoly acc = GradedPoly::constant(ctx_, p_, 1);
        for (unsigned i = 0; i < bound_[v]; ++i) acc = truncate(acc * *elim_[v]);
        if (!acc.is_zero())
            throw PresentationError("bound on eliminated " + ctx_->name(v) + " is not implied by the other relations");
    }
}

QuotientPresentation QuotientPresentation::from_relations(ContextPtr ctx, std::uint32_t p,
                                                          const std::vector<GradedPoly>& relations,
                                                          std::map<std::string, unsigned> nilpotency_bounds) {
    std::map<std::string, GradedPoly> elims;
    PrimeField field(p);
    for (const auto& rel : relations) {
        GradedPoly r = rel.embed(ctx);
        if (r.is_zero()) continue;
        auto qualifies = [&](std::size_t v) -> std::optional<std::uint32_t> {
            std::optional<std::uint32_t> coeff;
            for (const auto& t : r.terms()) {
                if (!t.mono.e[v]) continue;
                Monomial only;
                only.e[v] = 1;
                if (t.mono != only || coeff) return std::nullopt;
                coeff = t.coeff;
            }
            return coeff;
        };
        std::optional<std::size_t> chosen;
        const Monomial& lead = r.leading().mono;
        for (std::size_t v = 0; v < ctx->size() && !chosen; ++v)
            if (lead.total() == 1 && lead.e[v] == 1 && qualifies(v) && !elims.count(ctx->name(v))) chosen = v;
        for (std::size_t v = 0; v < ctx->size() && !chosen; ++v)
            if (qualifies(v) && !elims.count(ctx->name(v))) chosen = v;
        if (!chosen) throw PresentationError("relation " + r.to_string() + " has no linear eliminable variable");
        std::uint32_t c = *qualifies(*chosen);
        GradedPoly v = GradedPoly::variable(ctx, p, *chosen);
        // c v + rest = 0  =>  v = -rest / c
        GradedPoly rest = r - v.scaled_raw(c);
        elims.emplace(ctx->name(*chosen), rest.scaled_raw(field.neg(field.inv(c))));
    }
    // substitute earlier eliminations into later right-hand sides so no rhs mentions an eliminated variable
    for (int round = 0; round < 8; ++round) {
        bool changed = false;
        for (auto& [name, rhs] : elims) {
            std::vector<GradedPoly> images;
            bool mentions = false;
            for (std::size_t w = 0; w < ctx->size(); ++w) {
                auto it = elims.find(ctx->name(w));
                if (it != elims.end() && it->first != name) {
                    for (const auto& t : rhs.terms()) mentions |= t.mono.e[w] != 0;
                    images.push_back(it->second);
                } else {
                    images.push_back(GradedPoly::variable(ctx, p, w));
                }
            }
            if (mentions) {
                rhs = rhs.substitute(images);
                changed = true;
            }
        }
        if (!changed) break;
    }
    return QuotientPresentation(std::move(ctx), p, std::move(elims), std::move(nilpotency_bounds));
}

bool QuotientPresentation::survives(const Monomial& m) const noexcept {
    for (std::size_t v = 0; v < bound_.size(); ++v)
        if (bound_[v] && m.e[v] >= bound_[v]) return false;
    return true;
}

GradedPoly QuotientPresentation::truncate(const GradedPoly& f) const {
    return f.filter([this](const Monomial& m) { return survives(m); });
}

GradedPoly QuotientPresentation::multiply(const GradedPoly& a, const GradedPoly& b) const {
    if (!same_context(a.context(), ctx_) || !same_context(b.context(), ctx_)) throw ContextError("operands not in quotient ring");
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            Monomial m = x.mono * y.mono;
            if (!survives(m)) continue;
            auto& slot = acc[m];
            slot = static_cast<std::uint32_t>((slot + std::uint64_t(x.coeff) * y.coeff) % p_);
        }
    std::vector<GradedPoly::Term> terms;
    for (auto& [m, c] : acc)
        if (c) terms.push_back({m, c});
    GradedPoly prod = GradedPoly::from_terms(ctx_, p_, std::move(terms));
    // operands already in normal form keep eliminated variables out of the product
    return prod;
}

GradedPoly QuotientPresentation::normal_form(const GradedPoly& f) const {
    if (!same_context(f.context(), ctx_) || f.prime() != p_) throw ContextError("polynomial not over the quotient's ring");
    bool any_elim = false;
    for (const auto& e : elim_) any_elim |= e.has_value();
    if (!any_elim) return truncate(f);
    // powers of right-hand sides, truncated as they grow
    std::vector<std::vector<GradedPoly>> powers(elim_.size());
    auto rhs_power = [&](std::size_t v, unsigned e) -> const GradedPoly& {
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(GradedPoly::constant(ctx_, p_, 1));
        while (pw.size() <= e) pw.push_back(multiply(pw.back(), truncate(*elim_[v])));
        return pw[e];
    };
    std::vector<GradedPoly::Term> kept;
    GradedPoly out(ctx_, p_);
    for (const auto& t : f.terms()) {
        Monomial rest = t.mono;
        bool touched = false;
        for (std::size_t v = 0; v < elim_.size(); ++v)
            if (elim_[v] && rest.e[v]) {
                touched = true;
                rest.e[v] = 0;
            }
        if (!touched) {
            if (survives(t.mono)) kept.push_back(t);
            continue;
        }
        if (!survives(rest)) continue;
        GradedPoly term = GradedPoly::monomial(ctx_, p_, rest, t.coeff);
        for (std::size_t v = 0; v < elim_.size(); ++v)
            if (elim_[v] && t.mono.e[v]) term = multiply(term, rhs_power(v, t.mono.e[v]));
        out += term;
    }
    out += GradedPoly::from_terms(ctx_, p_, std::move(kept));
    return out;
}

RingMap::RingMap(ContextPtr source, QuotientPresentation target, std::map<std::string, GradedPoly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(source_->size()) {
    for (auto& [name, img] : images) {
        auto v = source_->require(name);
        GradedPoly im = img.embed(target_.context());
        if (im.prime() != target_.prime()) throw ContextError("image of " + name + " over the wrong prime");
        if (auto d = im.homogeneous_degree(); d && *d != source_->degree(v))
            throw ContextError("image of " + name + " has the wrong degree");
        images_[v] = target_.normal_form(im);
    }
}

GradedPoly RingMap::apply(const GradedPoly& f) const {
    if (!same_context(f.context(), source_)) throw ContextError("polynomial not over the map's source");
    const auto& q = target_;
    std::vector<std::vector<GradedPoly>> powers(images_.size());
    auto image_power = [&](std::size_t v, unsigned e) -> const GradedPoly& {
        if (!images_[v]) throw IncompleteMap("no image for variable " + source_->name(v));
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(GradedPoly::constant(q.context(), q.prime(), 1));
        while (pw.size() <= e) pw.push_back(q.multiply(pw.back(), *images_[v]));
        return pw[e];
    };
    GradedPoly out(q.context(), q.prime());
    for (const auto& t : f.terms()) {
        GradedPoly term = GradedPoly::constant(q.context(), q.prime(), t.coeff);
        for (std::size_t v = 0; v < images_.size() && !term.is_zero(); ++v)
            if (t.mono.e[v]) term = q.multiply(term, image_power(v, t.mono.e[v]));
        out += term;
    }
    return out;
}

GradedPoly normal_form(const QuotientPresentation& q, const GradedPoly& f) { return q.normal_form(f); }
GradedPoly apply_ring_map(const RingMap& m, const GradedPoly& f) { return m.apply(f); }

}  // namespace nilcheck
