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

#include "nilcheck/reflection_group.hpp"

#include <deque>
#include <unordered_set>

namespace nilcheck {

std::vector<Matrix> close_group(const std::vector<Matrix>& generators, std::size_t limit) {
    if (generators.empty()) throw RepresentationError("a group needs at least one generator");
    const auto n = generators.front().n;
    const auto p = generators.front().p;
    for (const auto& g : generators) {
        if (g.n != n || g.p != p) throw RepresentationError("generators differ in size or field");
        inverse(g);  // throws NotInvertible for singular input
    }
    std::unordered_set<Matrix, MatrixHash> seen;
    std::vector<Matrix> out;
    std::deque<Matrix> queue;
    auto id = Matrix::identity(n, p);
    seen.insert(id);
    out.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Matrix x = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Matrix y = x * g;
            if (seen.insert(y).second) {
                if (out.size() >= limit)
                    throw RepresentationError("closure exceeds " + std::to_string(limit) + " elements");
                out.push_back(y);
                queue.push_back(std::move(y));
            }
        }
    }
    return out;
}

std::optional<std::uint32_t> sqrt_mod(std::uint32_t a, std::uint32_t p) {
    a %= p;
    for (std::uint64_t r = 0; r < p; ++r)
        if (r * r % p == a) return static_cast<std::uint32_t>(r);
    return std::nullopt;
}

std::optional<std::uint32_t> primitive_root_of_unity(unsigned n, std::uint32_t p) {
    if (n == 0 || (p - 1) % n != 0) return std::nullopt;
    PrimeField f(p);
    for (std::uint32_t z = 1; z < p; ++z) {
        if (f.pow(z, n) != 1) continue;
        bool primitive = true;
        for (unsigned d = 1; d < n && primitive; ++d)
            if (n % d == 0 && f.pow(z, d) == 1) primitive = false;
        if (primitive) return z;
    }
    return std::nullopt;
}

ReflectionGroup::ReflectionGroup(std::uint32_t p, std::vector<Matrix> generators, GroupFamily family,
                                 std::string label, std::size_t expected_order)
    : p_(p), gens_(std::move(generators)), family_(family), label_(std::move(label)) {
    if (!is_prime(p)) throw UnsupportedPrime(std::to_string(p) + " is not prime");
    const std::size_t limit = expected_order ? expected_order : 100000;
    elems_ = close_group(gens_, limit);
    dim_ = gens_.front().n;
    if (expected_order && elems_.size() != expected_order)
        throw RepresentationError(label_ + " closed to order " + std::to_string(elems_.size()) + ", expected " +
                                  std::to_string(expected_order));
    if (elems_.size() % p == 0)
        throw UnsupportedPrime("p = " + std::to_string(p) + " divides the group order " + std::to_string(elems_.size()));
}

ReflectionGroup build_dihedral(unsigned n, std::uint32_t p) {
    if (n < 2) throw UnsupportedPrime("I2(n) needs n >= 2");
    if (!is_prime(p) || p == 2) throw UnsupportedPrime("I2(n) needs an odd prime");
    auto z = primitive_root_of_unity(n, p);
    if (!z) throw UnsupportedPrime("no primitive " + std::to_string(n) + "-th root of unity mod " + std::to_string(p));
    PrimeField f(p);
    Matrix rot(2, p), swap(2, p);
    rot(0, 0) = *z;
    rot(1, 1) = f.inv(*z);
    swap(0, 1) = swap(1, 0) = 1;
    return ReflectionGroup(p, {rot, swap}, GroupFamily::dihedral, "I2(" + std::to_string(n) + ")", 2 * n);
}

ReflectionGroup build_coxeter_h(unsigned rank, std::uint32_t p) {
    if (rank != 3 && rank != 4) throw UnsupportedPrime("H-type groups exist in rank 3 and 4 only");
    if (!is_prime(p) || p == 2) throw UnsupportedPrime("H-type groups need an odd prime");
    auto r5 = sqrt_mod(5, p);
    if (!r5) throw UnsupportedPrime("5 is not a square mod " + std::to_string(p));
    PrimeField f(p);
    // -2cos(pi/5) = -(1 + sqrt5)/2
    const std::uint32_t five = f.neg(f.mul(f.add(1, *r5), f.inv(2)));
    // linear diagram 1 -5- 2 -3- 3 (-3- 4)
    std::vector<std::vector<std::uint32_t>> C(rank, std::vector<std::uint32_t>(rank, 0));
    for (unsigned i = 0; i < rank; ++i) C[i][i] = 2;
    C[0][1] = C[1][0] = five;
    for (unsigned i = 1; i + 1 < rank; ++i) C[i][i + 1] = C[i + 1][i] = f.neg(1);
    std::vector<Matrix> gens;
    for (unsigned i = 0; i < rank; ++i) {
        Matrix s = Matrix::identity(rank, p);
        // s(e_j) = e_j - C_ij e_i: column j gains -C_ij in row i
        for (unsigned j = 0; j < rank; ++j) s(i, j) = f.sub(s(i, j), C[i][j]);
        gens.push_back(std::move(s));
    }
    return ReflectionGroup(p, std::move(gens), rank == 3 ? GroupFamily::h3 : GroupFamily::h4, rank == 3 ? "H3" : "H4",
                           rank == 3 ? 120 : 14400);
}

}  // namespace nilcheck
