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

#include "nilcheck/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "nilcheck/parallel.hpp"

namespace nilcheck::kernels {

HomogeneousIndex::HomogeneousIndex(std::size_t n, unsigned d) : n_(n), d_(d) {
    if (n == 0 || n > kMaxVars) throw ContextError("homogeneous index needs 1..16 variables");
    count_.assign(n + 1, std::vector<std::size_t>(d + 1, 0));
    for (unsigned m = 0; m <= d; ++m) count_[1][m] = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        std::size_t run = 0;
        for (unsigned m = 0; m <= d; ++m) {
            run += count_[k - 1][m];
            count_[k][m] = run;
        }
    }
    monos_.reserve(count_[n][d]);
    Monomial cur;
    // descending lex: first variable's exponent runs from d down to 0
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n_) {
            cur.e[i] = static_cast<std::uint8_t>(left);
            monos_.push_back(cur);
            return;
        }
        for (int x = static_cast<int>(left); x >= 0; --x) {
            cur.e[i] = static_cast<std::uint8_t>(x);
            self(self, i + 1, left - x);
        }
        cur.e[i] = 0;
    };
    if (d > 255 * n) throw ContextError("degree too large for exponent width");
    rec(rec, 0, d);
}

std::size_t HomogeneousIndex::rank(const Monomial& m) const noexcept {
    // monomials with a larger exponent at the first differing position come first
    std::size_t r = 0;
    unsigned left = d_;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
        unsigned e = m.e[i];
        // count of tails with exponent at i in (e, left]: sum over x of count_[n-i-1][left-x]
        if (e < left) r += count_[n_ - i][left - e - 1];
        left -= e;
    }
    return r;
}

std::shared_ptr<const HomogeneousIndex> homogeneous_index(std::size_t n, unsigned d) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const HomogeneousIndex>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({n, d});
        if (it != cache.end()) return it->second;
    }
    auto idx = std::make_shared<const HomogeneousIndex>(n, d);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(n, d), idx).first->second;
}

DenseForm DenseForm::zero(std::size_t vars, unsigned degree) {
    DenseForm f;
    f.vars = vars;
    f.degree = degree;
    f.c.assign(homogeneous_index(vars, degree)->size(), 0);
    return f;
}

bool DenseForm::is_zero() const noexcept {
    for (auto x : c)
        if (x) return false;
    return true;
}

DenseForm to_dense(const GradedPoly& f) {
    if (f.is_zero()) throw ContextError("zero polynomial has no dense degree");
    unsigned d = f.terms().front().mono.total();
    auto out = DenseForm::zero(f.context()->size(), d);
    auto idx = homogeneous_index(out.vars, d);
    for (const auto& t : f.terms()) {
        if (t.mono.total() != d) throw ContextError("dense form needs a homogeneous polynomial");
        out.c[idx->rank(t.mono)] = t.coeff;
    }
    return out;
}

GradedPoly from_dense(const DenseForm& f, const ContextPtr& ctx, std::uint32_t p) {
    if (ctx->size() != f.vars) throw ContextError("dense form arity differs from context");
    auto idx = homogeneous_index(f.vars, f.degree);
    std::vector<GradedPoly::Term> terms;
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i]) terms.push_back({idx->monomial(i), f.c[i]});
    return GradedPoly::from_terms(ctx, p, std::move(terms));
}

namespace {

struct SparseView {
    std::vector<std::uint32_t> idx;
    std::vector<std::uint32_t> val;
};

SparseView nonzeros(const DenseForm& f) {
    SparseView v;
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i]) {
            v.idx.push_back(static_cast<std::uint32_t>(i));
            v.val.push_back(f.c[i]);
        }
    return v;
}

void accumulate_rows(const SparseView& a, std::size_t begin, std::size_t end, const SparseView& b,
                     const HomogeneousIndex& ia, const HomogeneousIndex& ib, const HomogeneousIndex& out,
                     std::vector<std::uint64_t>& acc, std::uint32_t p) {
    // each row adds at most one product < p^2 to a slot; fold before the 64-bit accumulator can wrap
    const std::uint64_t p2 = std::uint64_t(p) * p;
    std::size_t fold = static_cast<std::size_t>(std::min<std::uint64_t>(4096, (~0ull >> 1) / p2));
    if (fold == 0) fold = 1;
    std::size_t since = 0;
    for (std::size_t i = begin; i < end; ++i) {
        const Monomial& ma = ia.monomial(a.idx[i]);
        const std::uint64_t ca = a.val[i];
        for (std::size_t j = 0; j < b.idx.size(); ++j) {
            Monomial m;
            for (std::size_t k = 0; k < out.vars(); ++k) m.e[k] = static_cast<std::uint8_t>(ma.e[k] + ib.monomial(b.idx[j]).e[k]);
            auto& slot = acc[out.rank(m)];
            slot += ca * b.val[j];
        }
        if (++since == fold) {
            for (auto& x : acc) x %= p;
            since = 0;
        }
    }
}

}  // namespace

DenseForm dense_mul_serial(const DenseForm& a, const DenseForm& b, std::uint32_t p) {
    if (a.vars != b.vars) throw ContextError("dense forms differ in arity");
    auto ia = homogeneous_index(a.vars, a.degree), ib = homogeneous_index(b.vars, b.degree);
    auto io = homogeneous_index(a.vars, a.degree + b.degree);
    auto sa = nonzeros(a), sb = nonzeros(b);
    std::vector<std::uint64_t> acc(io->size(), 0);
    accumulate_rows(sa, 0, sa.idx.size(), sb, *ia, *ib, *io, acc, p);
    DenseForm r{a.vars, a.degree + b.degree, std::vector<std::uint32_t>(io->size())};
    for (std::size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<std::uint32_t>(acc[i] % p);
    return r;
}

DenseForm dense_mul_parallel(const DenseForm& a, const DenseForm& b, std::uint32_t p) {
    if (a.vars != b.vars) throw ContextError("dense forms differ in arity");
    auto sa = nonzeros(a), sb = nonzeros(b);
    const int threads = thread_budget();
    if (threads == 1 || static_cast<long>(sa.idx.size() * sb.idx.size()) < kParallelThreshold)
        return dense_mul_serial(a, b, p);
    auto ia = homogeneous_index(a.vars, a.degree), ib = homogeneous_index(b.vars, b.degree);
    auto io = homogeneous_index(a.vars, a.degree + b.degree);
    std::vector<std::uint64_t> total(io->size(), 0);
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t> acc(io->size(), 0);
        const std::size_t rows = sa.idx.size();
        const std::size_t nt = static_cast<std::size_t>(omp_get_num_threads());
        const std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
        const std::size_t chunk = (rows + nt - 1) / nt;
        const std::size_t begin = std::min(rows, tid * chunk), end = std::min(rows, begin + chunk);
        accumulate_rows(sa, begin, end, sb, *ia, *ib, *io, acc, p);
#pragma omp critical
        for (std::size_t i = 0; i < acc.size(); ++i) total[i] = (total[i] + acc[i] % p) % p;
    }
    DenseForm r{a.vars, a.degree + b.degree, std::vector<std::uint32_t>(io->size())};
    for (std::size_t i = 0; i < total.size(); ++i) r.c[i] = static_cast<std::uint32_t>(total[i] % p);
    return r;
}

DenseForm linear_form_power(std::span<const std::uint32_t> lin, unsigned m, const PrimeField& field) {
    const std::size_t n = lin.size();
    auto idx = homogeneous_index(n, m);
    DenseForm r{n, m, std::vector<std::uint32_t>(idx->size(), 0)};
    // powers of each coefficient up to m
    std::vector<std::vector<std::uint32_t>> pw(n, std::vector<std::uint32_t>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        pw[i][0] = 1 % field.modulus();
        for (unsigned k = 1; k <= m; ++k) pw[i][k] = field.mul(pw[i][k - 1], lin[i] % field.modulus());
    }
    for (std::size_t s = 0; s < idx->size(); ++s) {
        const Monomial& mono = idx->monomial(s);
        std::uint32_t c = 1;
        for (std::size_t i = 0; i < n && c; ++i) c = field.mul(c, pw[i][mono.e[i]]);
        if (!c) continue;
        r.c[s] = field.mul(c, field.multinomial(mono.e.data(), n));
    }
    return r;
}

namespace {

// Adds coeff * f(M t) into acc, with powers of the rows of M computed on demand.
class Substituter {
  public:
    Substituter(const Matrix& m, const PrimeField& field) : m_(m), field_(field), powers_(m.n) {}

    const DenseForm& row_power(std::size_t i, unsigned e) {
        auto it = powers_[i].find(e);
        if (it != powers_[i].end()) return it->second;
        std::vector<std::uint32_t> lin(m_.n);
        for (std::size_t j = 0; j < m_.n; ++j) lin[j] = m_(i, j);
        return powers_[i].emplace(e, linear_form_power(lin, e, field_)).first->second;
    }

    void add_into(const DenseForm& f, std::vector<std::uint64_t>& acc) {
        auto idx = homogeneous_index(f.vars, f.degree);
        const std::uint32_t p = field_.modulus();
        for (std::size_t s = 0; s < f.c.size(); ++s) {
            if (!f.c[s]) continue;
            const Monomial& mono = idx->monomial(s);
            DenseForm prod;
            bool have = false;
            for (std::size_t i = 0; i < f.vars; ++i) {
                if (!mono.e[i]) continue;
                const DenseForm& part = row_power(i, mono.e[i]);
                prod = have ? dense_mul_serial(prod, part, p) : part;
                have = true;
            }
            if (!have) prod = linear_form_power(std::vector<std::uint32_t>(f.vars, 0), 0, field_);
            const std::uint64_t c = f.c[s];
            for (std::size_t k = 0; k < prod.c.size(); ++k) acc[k] = (acc[k] + c * prod.c[k]) % p;
        }
    }

  private:
    const Matrix& m_;
    const PrimeField& field_;
    std::vector<std::map<unsigned, DenseForm>> powers_;
};

}  // namespace

DenseForm substitute_linear(const DenseForm& f, const Matrix& m, const PrimeField& field) {
    if (m.n != f.vars) throw ContextError("matrix size differs from form arity");
    std::vector<std::uint64_t> acc(f.c.size(), 0);
    Substituter(m, field).add_into(f, acc);
    DenseForm r{f.vars, f.degree, std::vector<std::uint32_t>(acc.size())};
    for (std::size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<std::uint32_t>(acc[i]);
    return r;
}

DenseForm orbit_sum_serial(const std::vector<Matrix>& group, const DenseForm& f, const PrimeField& field) {
    std::vector<std::uint64_t> acc(f.c.size(), 0);
    for (const auto& g : group) Substituter(g, field).add_into(f, acc);
    DenseForm r{f.vars, f.degree, std::vector<std::uint32_t>(acc.size())};
    for (std::size_t i = 0; i < acc.size(); ++i) r.c[i] = static_cast<std::uint32_t>(acc[i] % field.modulus());
    return r;
}

DenseForm orbit_sum_parallel(const std::vector<Matrix>& group, const DenseForm& f, const PrimeField& field) {
    const int threads = thread_budget();
    if (threads == 1 || group.size() < 64) return orbit_sum_serial(group, f, field);
    const std::uint32_t p = field.modulus();
    std::vector<std::uint64_t> total(f.c.size(), 0);
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t> acc(f.c.size(), 0);
#pragma omp for schedule(dynamic, 16)
        for (long g = 0; g < static_cast<long>(group.size()); ++g) Substituter(group[g], field).add_into(f, acc);
#pragma omp critical
        for (std::size_t i = 0; i < acc.size(); ++i) total[i] = (total[i] + acc[i]) % p;
    }
    DenseForm r{f.vars, f.degree, std::vector<std::uint32_t>(total.size())};
    for (std::size_t i = 0; i < total.size(); ++i) r.c[i] = static_cast<std::uint32_t>(total[i]);
    return r;
}

}  // namespace nilcheck::kernels
