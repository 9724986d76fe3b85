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

#include "nilcheck/linalg.hpp"

#include <unordered_map>

namespace nilcheck {

void EchelonBasis::reduce(std::vector<std::uint32_t>& v) const {
    PrimeField f(p_);
    for (const auto& [pivot, row] : rows_) {
        std::uint32_t k = v[pivot];
        if (!k) continue;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (row[i]) v[i] = f.sub(v[i], f.mul(k, row[i]));
    }
}

bool EchelonBasis::insert(std::vector<std::uint32_t> v) {
    reduce(v);
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) return false;
    PrimeField f(p_);
    std::uint32_t s = f.inv(v[pivot]);
    for (auto& x : v) x = f.mul(x, s);
    // keep rows fully reduced against the new pivot
    for (auto& [piv, row] : rows_) {
        std::uint32_t k = row[pivot];
        if (!k) continue;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) row[i] = f.sub(row[i], f.mul(k, v[i]));
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
}

LinearSolution solve_linear(const std::vector<GradedPoly>& columns, const GradedPoly& target) {
    const std::uint32_t p = target.prime();
    for (const auto& c : columns)
        if (!same_context(c.context(), target.context()) || c.prime() != p)
            throw ContextError("solve_linear operands live in different rings");
    // rows = union of supports
    std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
    auto index_all = [&](const GradedPoly& g) {
        for (const auto& t : g.terms()) row_of.emplace(t.mono, row_of.size());
    };
    for (const auto& c : columns) index_all(c);
    index_all(target);
    const std::size_t rows = row_of.size(), cols = columns.size();
    PrimeField f(p);

    // Column-wise elimination: keep echelon vectors with the combination of original columns that produced them.
    struct Reduced {
        std::size_t pivot;
        std::vector<std::uint32_t> vec;
        std::vector<std::uint32_t> combo;
    };
    std::vector<Reduced> basis;
    auto dense = [&](const GradedPoly& g) {
        std::vector<std::uint32_t> v(rows, 0);
        for (const auto& t : g.terms()) v[row_of.at(t.mono)] = t.coeff;
        return v;
    };
    auto eliminate = [&](std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& combo) {
        for (const auto& b : basis) {
            std::uint32_t k = v[b.pivot];
            if (!k) continue;
            for (std::size_t i = 0; i < rows; ++i)
                if (b.vec[i]) v[i] = f.sub(v[i], f.mul(k, b.vec[i]));
            for (std::size_t i = 0; i < combo.size(); ++i)
                if (b.combo[i]) combo[i] = f.sub(combo[i], f.mul(k, b.combo[i]));
        }
    };
    LinearSolution sol;
    for (std::size_t j = 0; j < cols; ++j) {
        auto v = dense(columns[j]);
        std::vector<std::uint32_t> combo(cols, 0);
        combo[j] = 1;
        eliminate(v, combo);
        std::size_t pivot = 0;
        while (pivot < rows && v[pivot] == 0) ++pivot;
        if (pivot == rows) {
            sol.kernel.push_back(std::move(combo));
            continue;
        }
        std::uint32_t s = f.inv(v[pivot]);
        for (auto& x : v) x = f.mul(x, s);
        for (auto& x : combo) x = f.mul(x, s);
        basis.push_back({pivot, std::move(v), std::move(combo)});
    }
    auto v = dense(target);
    std::vector<std::uint32_t> combo(cols, 0);
    // track target = sum combo_i * column_i by eliminating with negated sign
    for (const auto& b : basis) {
        std::uint32_t k = v[b.pivot];
        if (!k) continue;
        for (std::size_t i = 0; i < rows; ++i)
            if (b.vec[i]) v[i] = f.sub(v[i], f.mul(k, b.vec[i]));
        for (std::size_t i = 0; i < cols; ++i)
            if (b.combo[i]) combo[i] = f.add(combo[i], f.mul(k, b.combo[i]));
    }
    for (auto x : v)
        if (x) throw NotInSpan("target " + target.to_string() + " is not in the span of the columns");
    sol.coefficients = std::move(combo);
    return sol;
}

}  // namespace nilcheck
