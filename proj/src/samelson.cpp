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

#include "nilcheck/samelson.hpp"

#include <algorithm>

#include "nilcheck/errors.hpp"

namespace nilcheck {

SphereType::SphereType(std::vector<unsigned> degrees) : half_degrees(std::move(degrees)) {
    if (half_degrees.empty()) throw Unsupported("a sphere type needs at least one entry");
    if (!std::is_sorted(half_degrees.begin(), half_degrees.end())) throw Unsupported("type must be ascending");
    if (half_degrees.front() < 2) throw Unsupported("half-degrees must be at least 2");
}

std::string SphereType::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < half_degrees.size(); ++i) s += (i ? "," : "") + std::to_string(half_degrees[i]);
    return s + ")";
}

std::string to_string(HomotopyAnswer a) {
    switch (a) {
        case HomotopyAnswer::cyclic_p: return "Z/p";
        case HomotopyAnswer::zero: return "0";
        case HomotopyAnswer::unknown: return "unknown";
    }
    return "unknown";
}

HomotopyAnswer p_homotopy(unsigned n, unsigned i, std::uint32_t p) {
    if (p < 3 || n < 2 || i < 1) return HomotopyAnswer::unknown;
    if (i == 2 * p - 3) return HomotopyAnswer::cyclic_p;
    if (i <= 4 * p - 7) return HomotopyAnswer::zero;
    return HomotopyAnswer::unknown;
}

unsigned legendre(std::uint64_t m, std::uint32_t p) {
    unsigned e = 0;
    for (std::uint64_t q = p; q <= m; q *= p) {
        e += static_cast<unsigned>(m / q);
        if (q > m / p) break;
    }
    return e;
}

std::uint64_t nu_p_factorial_ratio(unsigned i, unsigned j, std::uint32_t p) {
    if (i < 1 || j < 1) throw IndexError("factorial ratio needs i, j >= 1");
    const unsigned e = legendre(i + j - 1, p) - legendre(i - 1, p) - legendre(j - 1, p);
    std::uint64_t r = 1;
    for (unsigned k = 0; k < e; ++k) r *= p;
    return r;
}

std::string to_string(Nontriviality n) {
    switch (n) {
        case Nontriviality::yes: return "yes";
        case Nontriviality::no: return "no";
        case Nontriviality::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Nontriviality bott_nonzero_su(unsigned i, unsigned j, std::uint32_t p) {
    return nu_p_factorial_ratio(i, j, p) > 1 ? Nontriviality::yes : Nontriviality::inconclusive;
}

Nontriviality bott_nonzero_sp(unsigned i, unsigned j, std::uint32_t p) {
    return nu_p_factorial_ratio(2 * i, 2 * j, p) > 1 ? Nontriviality::yes : Nontriviality::inconclusive;
}

nlohmann::json to_json(const SamelsonWitness& w, const SphereType& type) {
    auto deg = [&](unsigned pos) { return pos ? type.half_degrees.at(pos - 1) : 0u; };
    nlohmann::json j{{"source", w.source}, {"nonzero", to_string(w.nonzero)}};
    j["positions"] = {{"s", w.s}, {"i", w.i}, {"j", w.j}};
    j["half_degrees"] = {{"s", deg(w.s)}, {"i", deg(w.i)}, {"j", deg(w.j)}};
    if (w.t) {
        j["positions"]["t"] = w.t;
        j["positions"]["k"] = w.k;
        j["half_degrees"]["t"] = deg(w.t);
        j["half_degrees"]["k"] = deg(w.k);
    }
    return j;
}

namespace {

// Bott's bound for a pair of half-degrees, plus the degree bookkeeping that pins the target factor:
// <e_a, e_b> lies in pi_{2a+2b-2}, and pi_{2a+2b-2}(S^{2m-1}) can be nonzero only for a + b = m + p - 1.
PairOracle bott_oracle(const SphereType& type, std::uint32_t p, unsigned rank,
                       std::function<Nontriviality(unsigned, unsigned)> bott) {
    return [type, p, rank, bott](unsigned a, unsigned b, unsigned target) {
        const unsigned na = type.half_degrees.at(a - 1), nb = type.half_degrees.at(b - 1);
        const unsigned nt = type.half_degrees.at(target - 1);
        const unsigned offset = 2 * (na + nb) - 2 - (2 * nt - 1);
        if (na + nb != nt + p - 1) {
            if (2 * (na + nb) - 2 > 2 * nt - 1 && p_homotopy(nt, offset, p) == HomotopyAnswer::zero) return Nontriviality::no;
            if (2 * (na + nb) - 2 < 2 * nt - 1) return Nontriviality::no;
            return Nontriviality::inconclusive;
        }
        if (std::count(type.half_degrees.begin(), type.half_degrees.end(), nt) != 1) return Nontriviality::inconclusive;
        if (na + nb <= rank) return Nontriviality::inconclusive;
        return bott(na, nb);
    };
}

}  // namespace

PairOracle bott_oracle_su(const SphereType& type, std::uint32_t p) {
    return bott_oracle(type, p, type.top(), [p](unsigned a, unsigned b) { return bott_nonzero_su(a, b, p); });
}

PairOracle bott_oracle_sp(const SphereType& type, std::uint32_t p) {
    // half-degrees 2i; Bott's condition i + j > n reads 2i + 2j > 2n
    return bott_oracle(type, p, type.top(), [p](unsigned a, unsigned b) {
        if (a % 2 || b % 2) return Nontriviality::inconclusive;
        return bott_nonzero_sp(a / 2, b / 2, p);
    });
}

TripleResult triple_condition(const SphereType& type, std::uint32_t p, const PairOracle& oracle) {
    const auto& d = type.half_degrees;
    const auto l = static_cast<unsigned>(d.size());
    auto position_of = [&](long value) -> unsigned {
        for (unsigned q = 0; q < l; ++q)
            if (static_cast<long>(d[q]) == value) return q + 1;
        return 0;
    };
    const unsigned s = position_of(2);
    if (!s) return {};
    for (unsigned i = l; i >= 1; --i) {
        const unsigned t = position_of(static_cast<long>(p) + 1 - d[i - 1]);
        if (!t || oracle(i, t, s) != Nontriviality::yes) continue;
        for (unsigned j = l; j >= 1; --j) {
            const unsigned k = position_of(static_cast<long>(d[t - 1]) + p - 1 - d[j - 1]);
            if (!k || oracle(j, k, t) != Nontriviality::yes) continue;
            SamelsonWitness w;
            w.s = s;
            w.i = i;
            w.t = t;
            w.j = j;
            w.k = k;
            w.nonzero = Nontriviality::yes;
            return {true, w};
        }
    }
    return {};
}

}  // namespace nilcheck
