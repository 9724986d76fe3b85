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

#include "nilcheck/symmetric.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "nilcheck/steenrod.hpp"

namespace nilcheck {

namespace {

void check_arity(unsigned n) {
    if (n == 0 || n > kMaxVars) throw IndexError("arity must be between 1 and 16");
}

// Sum over k-subsets of {0..n-1} of prod t_i^power.
GradedPoly subset_sum(unsigned k, unsigned n, unsigned power, std::uint32_t p) {
    auto ctx = t_context(n);
    std::vector<GradedPoly::Term> terms;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        Monomial m;
        for (unsigned i = 0; i < n; ++i)
            if (pick[i]) m.e[i] = static_cast<std::uint8_t>(power);
        terms.push_back({m, 1});
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return GradedPoly::from_terms(ctx, p, std::move(terms));
}

ContextPtr cached_context(unsigned n, bool pc) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, bool>, ContextPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{n, pc}];
    if (!slot) {
        std::vector<std::string> names;
        std::vector<int> degrees;
        for (unsigned k = 1; k <= n; ++k) {
            if (pc && k == n) {
                names.push_back("c" + std::to_string(n));
                degrees.push_back(static_cast<int>(2 * n));
            } else {
                names.push_back("p" + std::to_string(k));
                degrees.push_back(static_cast<int>(4 * k));
            }
        }
        slot = make_context(std::move(names), std::move(degrees));
    }
    return slot;
}

// Symmetric polynomial in u_1..u_n stored by its coefficients on sorted exponent vectors
// (the monomial symmetric basis).
using SymFn = std::unordered_map<Monomial, std::uint32_t, MonomialHash>;

struct Block {
    std::size_t start;
    std::size_t len;
    unsigned value;
};

std::vector<Block> blocks_of(const Monomial& lam, unsigned n) {
    std::vector<Block> out;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && lam.e[j] == lam.e[i]) ++j;
        out.push_back({i, j - i, lam.e[i]});
        i = j;
    }
    return out;
}

std::uint64_t small_binomial(std::size_t n, std::size_t k) {
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

constexpr auto kBinomial = [] {
    std::array<std::array<std::uint32_t, kMaxVars + 1>, kMaxVars + 1> c{};
    for (std::size_t i = 0; i <= kMaxVars; ++i) {
        c[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0);
    }
    return c;
}();

// g * e_r in the monomial symmetric basis on n variables.
//
// Raising k_b entries of each block b of a partition mu gives a partition lam; m_lam then appears with
// multiplicity prod_b C(k_b + u, k_b), where u counts the unraised entries of the block just above
// when that block has value v_b + 1 (the two groups merge into one block of lam).
SymFn times_elementary(const SymFn& g, unsigned r, unsigned n, std::uint32_t p) {
    SymFn out;
    out.reserve(g.size() * 2);
    std::array<Block, kMaxVars> bl{};
    std::array<unsigned, kMaxVars> k{};
    for (const auto& [mu, c] : g) {
        std::size_t nb = 0;
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j < n && mu.e[j] == mu.e[i]) ++j;
            bl[nb++] = {i, j - i, mu.e[i]};
            i = j;
        }
        const std::uint32_t coeff = c;
        auto rec = [&](auto&& self, std::size_t b, unsigned left) -> void {
            if (b == nb) {
                if (left) return;
                Monomial lam = mu;
                std::uint64_t mult = 1;
                for (std::size_t x = 0; x < nb; ++x) {
                    if (!k[x]) continue;
                    for (unsigned i = 0; i < k[x]; ++i) lam.e[bl[x].start + i] = static_cast<std::uint8_t>(bl[x].value + 1);
                    unsigned above = 0;
                    if (x > 0 && bl[x - 1].value == bl[x].value + 1) above = static_cast<unsigned>(bl[x - 1].len) - k[x - 1];
                    mult *= kBinomial[k[x] + above][k[x]];
                }
                auto& slot = out[lam];
                slot = static_cast<std::uint32_t>((slot + (mult % p) * coeff) % p);
                return;
            }
            const unsigned hi = std::min<unsigned>(left, static_cast<unsigned>(bl[b].len));
            for (unsigned x = 0; x <= hi; ++x) {
                k[b] = x;
                self(self, b + 1, left - x);
            }
            k[b] = 0;
        };
        rec(rec, 0, r);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

bool graded_greater(const Monomial& a, const Monomial& b) {
    unsigned ta = a.total(), tb = b.total();
    if (ta != tb) return ta > tb;
    return std::memcmp(a.e.data(), b.e.data(), kMaxVars) > 0;
}

// Products e_a = prod e_r^{a_r} in the monomial basis, shared by every conversion with the same (n, p).
struct ElementaryTable {
    std::mutex mu;
    std::unordered_map<Monomial, SymFn, MonomialHash> products;
    std::size_t stored_terms = 0;
};

// Dropped wholesale once it holds this many coefficients (roughly a few hundred MB).
constexpr std::size_t kTableBudget = 8'000'000;

ElementaryTable& elementary_table(unsigned n, std::uint32_t p) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, std::uint32_t>, std::unique_ptr<ElementaryTable>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[{n, p}];
    if (!slot) slot = std::make_unique<ElementaryTable>();
    return *slot;
}

// Writes a symmetric function as a polynomial in the elementary symmetric functions e_1..e_n,
// by repeatedly cancelling the leading partition. Result keys are exponent vectors over e_r.
std::vector<std::pair<Monomial, std::uint32_t>> to_elementary(SymFn f, unsigned n, std::uint32_t p) {
    PrimeField field(p);
    auto& table = elementary_table(n, p);
    std::lock_guard lock(table.mu);
    if (table.stored_terms > kTableBudget) {
        table.products.clear();
        table.stored_terms = 0;
    }
    auto& memo = table.products;
    auto product = [&](auto&& self, const Monomial& a) -> const SymFn& {
        auto it = memo.find(a);
        if (it != memo.end()) return it->second;
        SymFn val;
        int r = -1;
        for (int i = static_cast<int>(n) - 1; i >= 0; --i)
            if (a.e[i]) {
                r = i;
                break;
            }
        if (r < 0) {
            val.emplace(Monomial{}, 1u % p);
        } else {
            Monomial prev = a;
            --prev.e[r];
            // copy before recursing further: memo may rehash
            SymFn base = self(self, prev);
            val = times_elementary(base, static_cast<unsigned>(r + 1), n, p);
        }
        table.stored_terms += val.size();
        return memo.emplace(a, std::move(val)).first->second;
    };
    std::vector<std::pair<Monomial, std::uint32_t>> result;
    while (!f.empty()) {
        auto lead = f.begin();
        for (auto it = f.begin(); it != f.end(); ++it)
            if (graded_greater(it->first, lead->first)) lead = it;
        const Monomial lam = lead->first;
        const std::uint32_t c = lead->second;
        Monomial a;
        for (unsigned r = 0; r < n; ++r) a.e[r] = static_cast<std::uint8_t>(lam.e[r] - (r + 1 < n ? lam.e[r + 1] : 0));
        const SymFn& e_prod = product(product, a);
        for (const auto& [mu, v] : e_prod) {
            auto& slot = f[mu];
            slot = field.sub(slot, field.mul(c, v));
            if (!slot) f.erase(mu);
        }
        if (f.count(lam)) throw NotInvariant("leading-term elimination did not cancel; input is not symmetric");
        result.emplace_back(a, c);
    }
    return result;
}

std::uint64_t distinct_permutations(const Monomial& lam, unsigned n) {
    std::uint64_t r = 1;
    std::size_t placed = 0;
    for (const auto& b : blocks_of(lam, n)) {
        r *= small_binomial(placed + b.len, b.len);
        placed += b.len;
    }
    return r;
}

}  // namespace

GradedPoly elementary_class(unsigned k, unsigned n, std::uint32_t p) {
    check_arity(n);
    if (k < 1 || k > n) throw IndexError("c_k needs 1 <= k <= n");
    return subset_sum(k, n, 1, p);
}

GradedPoly pontryagin_class(unsigned k, unsigned n, std::uint32_t p) {
    check_arity(n);
    if (k < 1 || k > n) throw IndexError("p_k needs 1 <= k <= n");
    return subset_sum(k, n, 2, p);
}

GradedPoly power_sum(unsigned k, unsigned n, std::uint32_t p) {
    check_arity(n);
    if (k < 1) throw IndexError("s_k needs k >= 1");
    if (2 * k > 255) throw IndexError("s_k exponent exceeds supported width");
    return subset_sum(1, n, 2 * k, p);
}

GradedPoly expand(const SymmetricBasisElement& elem, std::uint32_t p) {
    switch (elem.kind) {
        case SymmetricKind::elementary: return elementary_class(elem.index, elem.arity, p);
        case SymmetricKind::pontryagin: return pontryagin_class(elem.index, elem.arity, p);
        case SymmetricKind::power_sum: return power_sum(elem.index, elem.arity, p);
    }
    throw IndexError("unknown symmetric kind");
}

ContextPtr pontryagin_context(unsigned n) {
    check_arity(n);
    return cached_context(n, false);
}

ContextPtr pc_context(unsigned n) {
    check_arity(n);
    return cached_context(n, true);
}

GradedPoly girard_expand(unsigned k, unsigned n, std::uint32_t p) {
    check_arity(n);
    if (k < 1) throw IndexError("s_k needs k >= 1");
    if (k >= p) throw Unsupported("closed-form power sums need k < p");
    PrimeField f(p);
    std::vector<std::uint32_t> fact(k + 1), inv_fact(k + 1);
    fact[0] = 1;
    for (unsigned i = 1; i <= k; ++i) fact[i] = f.mul(fact[i - 1], i);
    for (unsigned i = 0; i <= k; ++i) inv_fact[i] = f.inv(fact[i]);
    auto ctx = pontryagin_context(n);
    std::vector<GradedPoly::Term> terms;
    Monomial m;
    // i_1 + 2 i_2 + ... + n i_n = k
    auto rec = [&](auto&& self, unsigned r, unsigned left) -> void {
        if (r == 0) {
            if (left) return;
            unsigned parts = 0;
            std::uint32_t denom = 1;
            for (unsigned i = 0; i < n; ++i) {
                parts += m.e[i];
                denom = f.mul(denom, inv_fact[m.e[i]]);
            }
            std::uint32_t c = f.mul(f.mul(k % p, fact[parts - 1]), denom);
            if ((k + parts) % 2) c = f.neg(c);
            terms.push_back({m, c});
            return;
        }
        for (unsigned i = 0; i * r <= left; ++i) {
            m.e[r - 1] = static_cast<std::uint8_t>(i);
            self(self, r - 1, left - i * r);
        }
        m.e[r - 1] = 0;
    };
    rec(rec, std::min(n, k), k);
    return GradedPoly::from_terms(ctx, p, std::move(terms));
}

GradedPoly to_pc_basis(const GradedPoly& f, unsigned n) {
    check_arity(n);
    const auto& ctx = f.context();
    if (ctx->size() != n || !ctx->all_degree(2)) throw ContextError("to_pc_basis expects a polynomial in t1..tn");
    const std::uint32_t p = f.prime();
    SymFn even, odd;
    std::unordered_map<Monomial, std::uint64_t, MonomialHash> orbit_hits;
    for (const auto& t : f.terms()) {
        unsigned parity = t.mono.e[0] % 2;
        Monomial u;
        for (unsigned i = 0; i < n; ++i) {
            if (t.mono.e[i] % 2 != parity)
                throw NotInvariant("monomial " + GradedPoly::monomial(ctx, p, t.mono).to_string() +
                                   " mixes exponent parities; not invariant under even sign changes");
            u.e[i] = static_cast<std::uint8_t>((t.mono.e[i] - parity) / 2);
        }
        std::sort(u.e.begin(), u.e.begin() + n, std::greater<>());
        // parity bit lives in an unused slot so the two classes never collide
        Monomial key = u;
        key.e[kMaxVars - 1] = static_cast<std::uint8_t>(parity);
        ++orbit_hits[key];
        SymFn& part = parity ? odd : even;
        auto [it, fresh] = part.emplace(u, t.coeff);
        if (!fresh && it->second != t.coeff) throw NotInvariant("coefficients differ within a permutation orbit");
    }
    for (const auto& [key, hits] : orbit_hits) {
        Monomial u = key;
        u.e[kMaxVars - 1] = 0;
        if (hits != distinct_permutations(u, n)) throw NotInvariant("polynomial is not symmetric in t1..tn");
    }
    auto out_ctx = pc_context(n);
    std::vector<GradedPoly::Term> terms;
    auto emit = [&](const std::vector<std::pair<Monomial, std::uint32_t>>& expr, bool times_cn) {
        for (const auto& [a, c] : expr) {
            Monomial m = a;
            unsigned cn = 2u * a.e[n - 1] + (times_cn ? 1u : 0u);
            if (cn > 255) throw ContextError("exponent overflow");
            m.e[n - 1] = static_cast<std::uint8_t>(cn);
            terms.push_back({m, c});
        }
    };
    emit(to_elementary(std::move(even), n, p), false);
    emit(to_elementary(std::move(odd), n, p), true);
    return GradedPoly::from_terms(out_ctx, p, std::move(terms));
}

GradedPoly from_pc_basis(const GradedPoly& g) {
    const auto& ctx = g.context();
    const auto n = static_cast<unsigned>(ctx->size());
    if (!same_context(ctx, pc_context(n))) throw ContextError("from_pc_basis expects p1..p(n-1), cn");
    std::vector<GradedPoly> images;
    for (unsigned k = 1; k < n; ++k) images.push_back(pontryagin_class(k, n, g.prime()));
    images.push_back(elementary_class(n, n, g.prime()));
    if (g.is_zero()) return GradedPoly(t_context(n), g.prime());
    return g.substitute(images);
}

GradedPoly p1_power_sum(unsigned k, unsigned n, std::uint32_t p) {
    if (p == 2) throw UnsupportedPrime("P^1 is implemented for odd primes only");
    return power_sum(k + (p - 1) / 2, n, p).scaled(2 * static_cast<std::int64_t>(k));
}

GradedPoly pc_steenrod_p1(const GradedPoly& g) {
    const auto n = static_cast<unsigned>(g.context()->size());
    return to_pc_basis(steenrod_p1(from_pc_basis(g)), n);
}

}  // namespace nilcheck
