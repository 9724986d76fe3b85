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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nilcheck {

/// Half-degrees (n_1, ..., n_l), ascending, each >= 2.
struct SphereType {
    std::vector<unsigned> half_degrees;

    SphereType() = default;
    explicit SphereType(std::vector<unsigned> degrees);
    unsigned top() const { return half_degrees.back(); }
    std::size_t size() const noexcept { return half_degrees.size(); }
    std::string to_string() const;
    friend bool operator==(const SphereType&, const SphereType&) = default;
};

enum class HomotopyAnswer { cyclic_p, zero, unknown };
std::string to_string(HomotopyAnswer a);

/// pi_{2n-1+i}(S^{2n-1}) localized at an odd prime p, in the range i <= 4p - 7.
HomotopyAnswer p_homotopy(unsigned n, unsigned i, std::uint32_t p);

/// Exponent of p in m!.
unsigned legendre(std::uint64_t m, std::uint32_t p);
/// The p-part of (i+j-1)! / ((i-1)! (j-1)!), as a power of p.
std::uint64_t nu_p_factorial_ratio(unsigned i, unsigned j, std::uint32_t p);

enum class Nontriviality { yes, no, inconclusive };
std::string to_string(Nontriviality n);

/// Bott: the order of <e_i, e_j> in SU(n) is a nonzero multiple of nu_p((i+j-1)!/((i-1)!(j-1)!)).
Nontriviality bott_nonzero_su(unsigned i, unsigned j, std::uint32_t p);
/// Sp(n) analogue with (2i+2j-1)!/((2i-1)!(2j-1)!).
Nontriviality bott_nonzero_sp(unsigned i, unsigned j, std::uint32_t p);

struct SamelsonWitness {
    /// 1-based positions in the type; `t` and `k` are unused for pair witnesses.
    unsigned s = 0, i = 0, t = 0, j = 0, k = 0;
    Nontriviality nonzero = Nontriviality::inconclusive;
    std::string source;  ///< bott | p1_criterion | table
};
nlohmann::json to_json(const SamelsonWitness& w, const SphereType& type);

/// Decides pi_target o <e_a, e_b> != 0 for positions a, b, target (1-based).
using PairOracle = std::function<Nontriviality(unsigned a, unsigned b, unsigned target)>;

/// Oracle for SU(n) and Sp(n) from Bott's formula: yes when the valuation reaches p, the degrees
/// exceed the rank (so the bracket does not factor through a lower stage), and the target half-degree
/// is the unique one with n_a + n_b = n_target + p - 1.
PairOracle bott_oracle_su(const SphereType& type, std::uint32_t p);
PairOracle bott_oracle_sp(const SphereType& type, std::uint32_t p);

struct TripleResult {
    bool satisfied = false;
    std::optional<SamelsonWitness> witness;
};

/// Positions (s, i, t, j, k) with n_s = 2, n_i + n_t = p + 1, n_j + n_k = n_t + p - 1 and the oracle
/// affirming both pi_s o <e_i, e_t> and pi_t o <e_j, e_k>.
TripleResult triple_condition(const SphereType& type, std::uint32_t p, const PairOracle& oracle);

}  // namespace nilcheck
