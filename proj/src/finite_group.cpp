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

#include "nilcheck/finite_group.hpp"

#include <unordered_set>

#include "nilcheck/reflection_group.hpp"

namespace nilcheck {

namespace {

constexpr std::size_t kMaxOrder = 100000;

using MatrixSet = std::unordered_set<Matrix, MatrixHash>;

// Iterates V_{m+1} = {[y, v] : y in ys, v in V_m} from V_1 = ys until it collapses to {e}.
std::optional<unsigned> iterate(const std::vector<Matrix>& ys, unsigned k_max) {
    if (ys.empty()) return 1;
    const auto id = Matrix::identity(ys.front().n, ys.front().p);
    MatrixSet level(ys.begin(), ys.end());
    for (unsigned k = 1; k <= k_max; ++k) {
        MatrixSet next;
        for (const auto& y : ys)
            for (const auto& v : level) next.insert(commutator(y, v));
        if (next.size() == 1 && next.count(id)) return k;
        level = std::move(next);
    }
    return std::nullopt;
}

Matrix permutation_matrix(const std::vector<unsigned>& perm, std::uint32_t p) {
    Matrix m(perm.size(), p);
    for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = 1;
    return m;
}

}  // namespace

FiniteGroupHandle::FiniteGroupHandle(std::string name, std::vector<Matrix> generators)
    : name_(std::move(name)), gens_(std::move(generators)), elems_(close_group(gens_, kMaxOrder)) {}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y * inverse(x) * inverse(y); }

std::optional<unsigned> nilpotency_class_oracle(const FiniteGroupHandle& g, unsigned k_max) {
    return iterate(g.elements(), k_max);
}

std::optional<unsigned> nilpotency_class(const FiniteGroupHandle& g, unsigned k_max) {
    std::vector<Matrix> ys;
    MatrixSet seen;
    for (const auto& x : g.generators())
        for (const auto& y : {x, inverse(x)})
            if (seen.insert(y).second) ys.push_back(y);
    return iterate(ys, k_max);
}

FiniteGroupHandle named_group(const std::string& name) {
    if (name == "abelian") {
        // Z/4 x Z/6 inside the diagonal matrices over F_13
        return FiniteGroupHandle(name, {Matrix::from_rows(13, {{5, 0}, {0, 1}}), Matrix::from_rows(13, {{1, 0}, {0, 4}})});
    }
    if (name == "dihedral8") return FiniteGroupHandle(name, build_dihedral(4, 5).generators());
    if (name == "dihedral16") return FiniteGroupHandle(name, build_dihedral(8, 17).generators());
    if (name == "heisenberg3")
        return FiniteGroupHandle(name, {Matrix::from_rows(3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
                                        Matrix::from_rows(3, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})});
    if (name == "s4")
        return FiniteGroupHandle(name, {permutation_matrix({1, 0, 2, 3}, 5), permutation_matrix({1, 2, 3, 0}, 5)});
    throw UnknownGroup("unknown finite group '" + name + "'");
}

std::vector<std::string> named_groups() { return {"abelian", "dihedral8", "dihedral16", "heisenberg3", "s4"}; }

}  // namespace nilcheck
