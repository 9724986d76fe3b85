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
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcheck/samelson.hpp"

namespace nilcheck {

enum class LieFamily { SU, Sp, Spin, G2, F4, E6, E7, E8 };
enum class ExoticNumber { n2b, n23, n30 };
/// Whether a raw type satisfies the triple Samelson condition; `automatic` asks the library to decide.
enum class Condition { satisfied, unsatisfied, automatic };

struct GroupSpec {
    enum class Kind { lie, exotic, raw, product };
    Kind kind = Kind::lie;
    LieFamily family = LieFamily::SU;
    ExoticNumber exotic = ExoticNumber::n23;
    unsigned parameter = 0;  ///< SU(n), Sp(n), Spin(n) total dimension, 2b's n
    SphereType type;         ///< raw types only
    bool loop_space = true;
    Condition condition = Condition::automatic;
    std::vector<GroupSpec> components;
    unsigned torus_rank = 0;

    static GroupSpec lie(LieFamily f, unsigned parameter = 0);
    static GroupSpec exotic_group(ExoticNumber n, unsigned parameter = 0);
    static GroupSpec raw(SphereType t, bool loop_space, Condition c);
    static GroupSpec product(std::vector<GroupSpec> parts, unsigned torus_rank = 0);

    std::string label() const;
};

/// "SU:8", "Sp:3", "Spin:11", "G2", "F4", "E6", "E7", "E8". Throws UnknownGroup.
GroupSpec parse_lie(const std::string& label);
/// "2b:12", "23", "30". Throws UnknownGroup.
GroupSpec parse_exotic(const std::string& label);

/// Throws UnknownGroup for products (which have no single type).
SphereType sphere_type(const GroupSpec& target);
bool is_regular(const GroupSpec& target, std::uint32_t p);

struct NilClass {
    enum class Kind { exact, one_or_two, unknown };
    Kind kind = Kind::unknown;
    unsigned value = 0;

    static NilClass exact(unsigned v) { return {Kind::exact, v}; }
    static NilClass range() { return {Kind::one_or_two, 0}; }
    static NilClass unknown() { return {Kind::unknown, 0}; }
    std::string to_string() const;
    friend bool operator==(const NilClass&, const NilClass&) = default;
};

struct NilVerdict {
    std::string group;
    std::uint32_t prime = 0;
    bool regular = false;
    NilClass cls;
    std::string branch;  ///< theorem or section the class comes from
    std::string reason;
    nlohmann::json witnesses = nlohmann::json::array();
};

struct DecideOptions {
    /// Attach invariant-theoretic witnesses to exotic class-3 verdicts (runs the P^1 computation).
    bool certify_exotic = false;
};

/// Throws Unsupported for p = 2 outside rank one, and for composite p.
NilVerdict decide(const GroupSpec& target, std::uint32_t p, const DecideOptions& opts = {});

nlohmann::json to_json(const NilVerdict& v);

}  // namespace nilcheck
