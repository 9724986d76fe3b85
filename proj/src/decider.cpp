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

#include "nilcheck/decider.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "nilcheck/errors.hpp"
#include "nilcheck/fp.hpp"
#include "nilcheck/invariants.hpp"

namespace nilcheck {

GroupSpec GroupSpec::lie(LieFamily f, unsigned parameter) {
    GroupSpec s;
    s.kind = Kind::lie;
    s.family = f;
    s.parameter = parameter;
    switch (f) {
        case LieFamily::SU:
            if (parameter < 2) throw UnknownGroup("SU(n) needs n >= 2");
            break;
        case LieFamily::Sp:
            if (parameter < 1) throw UnknownGroup("Sp(n) needs n >= 1");
            break;
        case LieFamily::Spin:
            if (parameter < 5) throw UnknownGroup("Spin(n) needs n >= 5");
            break;
        default: s.parameter = 0;
    }
    return s;
}

GroupSpec GroupSpec::exotic_group(ExoticNumber n, unsigned parameter) {
    GroupSpec s;
    s.kind = Kind::exotic;
    s.exotic = n;
    s.parameter = n == ExoticNumber::n2b ? parameter : 0;
    if (n == ExoticNumber::n2b && parameter < 3) throw UnknownGroup("2b needs n >= 3");
    return s;
}

GroupSpec GroupSpec::raw(SphereType t, bool loop_space, Condition c) {
    GroupSpec s;
    s.kind = Kind::raw;
    s.type = std::move(t);
    s.loop_space = loop_space;
    s.condition = c;
    return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> parts, unsigned torus_rank) {
    GroupSpec s;
    s.kind = Kind::product;
    s.components = std::move(parts);
    s.torus_rank = torus_rank;
    if (s.components.empty() && torus_rank == 0) throw UnknownGroup("empty product");
    return s;
}

namespace {

const char* family_name(LieFamily f) {
    switch (f) {
        case LieFamily::SU: return "SU";
        case LieFamily::Sp: return "Sp";
        case LieFamily::Spin: return "Spin";
        case LieFamily::G2: return "G2";
        case LieFamily::F4: return "F4";
        case LieFamily::E6: return "E6";
        case LieFamily::E7: return "E7";
        case LieFamily::E8: return "E8";
    }
    return "?";
}

unsigned parse_parameter(const std::string& label, const std::string& text) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size() || v <= 0 || v > 100000) throw UnknownGroup("");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw UnknownGroup("bad parameter in group label '" + label + "'");
    }
}

std::vector<unsigned> range_type(unsigned from, unsigned to, unsigned step) {
    std::vector<unsigned> v;
    for (unsigned k = from; k <= to; k += step) v.push_back(k);
    return v;
}

}  // namespace

std::string GroupSpec::label() const {
    switch (kind) {
        case Kind::lie: {
            std::string s = family_name(family);
            if (family == LieFamily::SU || family == LieFamily::Sp || family == LieFamily::Spin)
                s += "(" + std::to_string(parameter) + ")";
            return s;
        }
        case Kind::exotic:
            switch (exotic) {
                case ExoticNumber::n2b: return "2b(" + std::to_string(parameter) + ")";
                case ExoticNumber::n23: return "CE23";
                case ExoticNumber::n30: return "CE30";
            }
            return "?";
        case Kind::raw: return std::string(loop_space ? "loop" : "grouplike") + " type " + type.to_string();
        case Kind::product: {
            std::string s;
            for (const auto& c : components) s += (s.empty() ? "" : " x ") + c.label();
            if (torus_rank) s += (s.empty() ? "" : " x ") + std::string("T^") + std::to_string(torus_rank);
            return s;
        }
    }
    return "?";
}

GroupSpec parse_lie(const std::string& label) {
    auto colon = label.find(':');
    const std::string head = label.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : label.substr(colon + 1);
    static const std::map<std::string, LieFamily> families{
        {"SU", LieFamily::SU}, {"Sp", LieFamily::Sp}, {"Spin", LieFamily::Spin}, {"G2", LieFamily::G2},
        {"F4", LieFamily::F4}, {"E6", LieFamily::E6}, {"E7", LieFamily::E7},     {"E8", LieFamily::E8}};
    auto it = families.find(head);
    if (it == families.end()) throw UnknownGroup("unknown Lie group '" + label + "'");
    const bool classical = it->second == LieFamily::SU || it->second == LieFamily::Sp || it->second == LieFamily::Spin;
    if (classical != (colon != std::string::npos)) throw UnknownGroup("malformed Lie group label '" + label + "'");
    return GroupSpec::lie(it->second, classical ? parse_parameter(label, tail) : 0);
}

GroupSpec parse_exotic(const std::string& label) {
    if (label == "23") return GroupSpec::exotic_group(ExoticNumber::n23);
    if (label == "30") return GroupSpec::exotic_group(ExoticNumber::n30);
    if (label.rfind("2b:", 0) == 0) return GroupSpec::exotic_group(ExoticNumber::n2b, parse_parameter(label, label.substr(3)));
    throw UnknownGroup("unknown exotic group '" + label + "' (expected 2b:n, 23 or 30)");
}

SphereType sphere_type(const GroupSpec& target) {
    switch (target.kind) {
        case GroupSpec::Kind::lie: {
            const unsigned n = target.parameter;
            switch (target.family) {
                case LieFamily::SU: return SphereType(range_type(2, n, 1));
                case LieFamily::Sp: return SphereType(range_type(2, 2 * n, 2));
                case LieFamily::Spin: {
                    const unsigned h = n / 2;
                    if (n % 2) return SphereType(range_type(2, 2 * h, 2));
                    auto v = range_type(2, 2 * h - 2, 2);
                    v.push_back(h);
                    std::sort(v.begin(), v.end());
                    return SphereType(v);
                }
                case LieFamily::G2: return SphereType({2, 6});
                case LieFamily::F4: return SphereType({2, 6, 8, 12});
                case LieFamily::E6: return SphereType({2, 5, 6, 8, 9, 12});
                case LieFamily::E7: return SphereType({2, 6, 8, 10, 12, 14, 18});
                case LieFamily::E8: return SphereType({2, 8, 12, 14, 18, 20, 24, 30});
            }
            break;
        }
        case GroupSpec::Kind::exotic:
            switch (target.exotic) {
                case ExoticNumber::n2b: return SphereType({2, target.parameter});
                case ExoticNumber::n23: return SphereType({2, 6, 10});
                case ExoticNumber::n30: return SphereType({2, 12, 20, 30});
            }
            break;
        case GroupSpec::Kind::raw: return target.type;
        case GroupSpec::Kind::product: break;
    }
    throw UnknownGroup("no single type for " + target.label());
}

bool is_regular(const GroupSpec& target, std::uint32_t p) {
    switch (target.kind) {
        case GroupSpec::Kind::lie: return p >= sphere_type(target).top();
        case GroupSpec::Kind::exotic: return p > sphere_type(target).top();
        case GroupSpec::Kind::raw: {
            const auto& t = target.type;
            // 2p > 2 n_l - n_1 + 2
            return 2 * p > 2 * t.top() - t.half_degrees.front() + 2;
        }
        case GroupSpec::Kind::product:
            return std::all_of(target.components.begin(), target.components.end(),
                               [p](const GroupSpec& c) { return is_regular(c, p); });
    }
    return false;
}

std::string NilClass::to_string() const {
    switch (kind) {
        case Kind::exact: return std::to_string(value);
        case Kind::one_or_two: return "1 or 2";
        case Kind::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

using Json = nlohmann::json;

NilVerdict verdict(const GroupSpec& target, std::uint32_t p, NilClass c, std::string branch, std::string reason) {
    NilVerdict v;
    v.group = target.label();
    v.prime = p;
    v.regular = true;
    v.cls = c;
    v.branch = std::move(branch);
    v.reason = std::move(reason);
    return v;
}

void attach(NilVerdict& v, const TripleResult& r, const SphereType& type, const char* source) {
    if (!r.witness) return;
    auto w = *r.witness;
    w.source = source;
    v.witnesses.push_back(to_json(w, type));
}

struct InvariantCase {
    std::string key;
    std::function<ReflectionGroup()> build;
    std::vector<unsigned> degrees;
};

// The reflection group whose invariant ring has the given type at p, when one is catalogued.
std::optional<InvariantCase> invariant_case(const SphereType& t, std::uint32_t p) {
    const auto& d = t.half_degrees;
    if (d.size() == 2 && d[0] == 2 && d[1] >= 3 && p == d[1] + 1) {
        const unsigned n = d[1];
        return InvariantCase{"I2(" + std::to_string(n) + ")@" + std::to_string(p), [n, p] { return build_dihedral(n, p); }, d};
    }
    if (d == std::vector<unsigned>{2, 6, 10} && p == 11) return InvariantCase{"H3@11", [] { return build_coxeter_h(3, 11); }, d};
    if (d == std::vector<unsigned>{2, 12, 20, 30} && p == 31)
        return InvariantCase{"H4@31", [] { return build_coxeter_h(4, 31); }, d};
    return std::nullopt;
}

// check_condition results are expensive for H4; compute each at most once per process.
const ConditionVerdict& cached_condition(const InvariantCase& c) {
    static std::mutex mu;
    static std::map<std::string, ConditionVerdict> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(c.key);
        if (it != cache.end()) return it->second;
    }
    auto gs = fundamental_invariants(c.build(), c.degrees);
    auto verdict = check_condition(gs);
    std::lock_guard lock(mu);
    return cache.emplace(c.key, std::move(verdict)).first->second;
}

void attach(NilVerdict& v, const ConditionVerdict& c) {
    for (const auto& w : c.witnesses)
        v.witnesses.push_back(
            {{"source", "p1_criterion"}, {"generator", w.generator}, {"monomial", w.monomial}, {"coefficient", w.coefficient}});
}

NilVerdict decide_lie(const GroupSpec& target, std::uint32_t p) {
    const auto type = sphere_type(target);
    const unsigned nl = type.top();
    const auto f = target.family;
    if (2 * nl < p) return verdict(target, p, NilClass::exact(1), "Theorem 2.4(1)", "p > 2 n_l");
    const std::pair<LieFamily, std::uint32_t> key{f, p};
    static const std::vector<std::pair<LieFamily, std::uint32_t>> exceptions{
        {LieFamily::F4, 17}, {LieFamily::E6, 17}, {LieFamily::E8, 41}, {LieFamily::E8, 43}};
    if (std::find(exceptions.begin(), exceptions.end(), key) != exceptions.end())
        return verdict(target, p, NilClass::exact(2), "Theorem 1.3(2)", "exceptional pair of Theorem 1.3");
    if (2 * p > 3 * nl) return verdict(target, p, NilClass::exact(2), "Theorem 1.3(2)", "3 n_l / 2 < p < 2 n_l");
    // n_l <= p <= 3 n_l / 2
    static const std::vector<std::pair<LieFamily, std::uint32_t>> hamanaka_kono{
        {LieFamily::G2, 7}, {LieFamily::F4, 13}, {LieFamily::E6, 13}, {LieFamily::E7, 19}, {LieFamily::E8, 31}};
    if (std::find(hamanaka_kono.begin(), hamanaka_kono.end(), key) != hamanaka_kono.end()) {
        auto v = verdict(target, p, NilClass::exact(3), "§3 (Hamanaka-Kono)", "pi_2 o <e_2, e_{n_l}> != 0");
        SamelsonWitness w;
        w.s = 1;
        w.i = 1;
        w.j = static_cast<unsigned>(type.size());
        w.nonzero = Nontriviality::yes;
        w.source = "table";
        v.witnesses.push_back(to_json(w, type));
        return v;
    }
    if (key == std::pair{LieFamily::E7, 23u})
        return verdict(target, p, NilClass::exact(3), "§3.2.1", "P^1 criterion through the Spin(10) restriction");
    if (key == std::pair{LieFamily::E8, 37u})
        return verdict(target, p, NilClass::exact(3), "§3.2.2", "P^1 criterion through the Spin(16) restriction");
    switch (f) {
        case LieFamily::SU: {
            auto r = triple_condition(type, p, bott_oracle_su(type, p));
            auto v = p == nl ? verdict(target, p, NilClass::exact(3), "§3.1.1", "SU(p) at p")
                             : verdict(target, p, NilClass::exact(3), "Theorem 1.3(1)", "n_l <= p <= 3 n_l / 2; Bott witnesses");
            attach(v, r, type, "bott");
            return v;
        }
        case LieFamily::Sp: {
            auto r = triple_condition(type, p, bott_oracle_sp(type, p));
            auto v = verdict(target, p, NilClass::exact(3), "Theorem 1.3(1)", "n_l <= p <= 3 n_l / 2; Bott witnesses");
            attach(v, r, type, "bott");
            return v;
        }
        case LieFamily::Spin: {
            auto v = verdict(target, p, NilClass::exact(3), "§3.1.3", "Friedlander / Harris reduction to Sp");
            if (target.parameter % 2) {
                auto r = triple_condition(type, p, bott_oracle_sp(type, p));
                attach(v, r, type, "bott");
            }
            return v;
        }
        default: break;
    }
    return verdict(target, p, NilClass::exact(3), "Theorem 1.3(1)", "n_l <= p <= 3 n_l / 2");
}

NilVerdict decide_exotic(const GroupSpec& target, std::uint32_t p, const DecideOptions& opts) {
    const auto type = sphere_type(target);
    const unsigned nl = type.top();
    if (2 * nl < p) return verdict(target, p, NilClass::exact(1), "Theorem 1.4(1)", "p > 2 n_l");
    const bool special = target.exotic == ExoticNumber::n2b || (target.exotic == ExoticNumber::n23 && p == 11) ||
                         (target.exotic == ExoticNumber::n30 && p == 31);
    if (!special) return verdict(target, p, NilClass::exact(2), "Theorem 1.4(2)", "n_l < p < 2 n_l");
    auto v = verdict(target, p, NilClass::exact(3), "Theorem 1.4(3)", "exceptional pair of Theorem 1.4");
    if (opts.certify_exotic)
        if (auto c = invariant_case(type, p)) attach(v, cached_condition(*c));
    return v;
}

NilVerdict decide_raw(const GroupSpec& target, std::uint32_t p) {
    const auto& type = target.type;
    const unsigned nl = type.top(), n1 = type.half_degrees.front();
    const char* thm = target.loop_space ? "Corollary 2.5" : "Theorem 2.4";
    auto two = [&](const char* clause, std::string reason) {
        return verdict(target, p, target.loop_space ? NilClass::exact(2) : NilClass::range(), std::string(thm) + clause,
                       std::move(reason));
    };
    if (2 * nl < p) return verdict(target, p, NilClass::exact(1), std::string(thm) + "(1)", "p > 2 n_l");
    if (2 * p > 3 * nl) return two("(2a)", "3 n_l / 2 < p < 2 n_l");
    // n_l - n_1/2 + 1 < p <= 3 n_l / 2
    bool in_three_range = n1 == 2 && p > nl;
    Condition cond = target.condition;
    if (n1 != 2) cond = Condition::unsatisfied;  // the condition needs n_s = 2
    if (cond == Condition::automatic && in_three_range) {
        const auto& d = type.half_degrees;
        const bool su = d == range_type(2, nl, 1);
        const bool sp = nl % 2 == 0 && d == range_type(2, nl, 2);
        if (su || sp) {
            auto r = triple_condition(type, p, su ? bott_oracle_su(type, p) : bott_oracle_sp(type, p));
            if (r.satisfied) {
                auto v = verdict(target, p, NilClass::exact(3), std::string(thm) + "(3)", "triple condition via Bott");
                attach(v, r, type, "bott");
                return v;
            }
        } else if (auto c = invariant_case(type, p)) {
            const auto& cv = cached_condition(*c);
            if (cv.satisfied) {
                auto v = verdict(target, p, NilClass::exact(3), std::string(thm) + "(3)", "triple condition via P^1");
                attach(v, cv);
                return v;
            }
        }
        return verdict(target, p, NilClass::unknown(), std::string(thm), "no oracle settles the triple condition for this type");
    }
    if (cond == Condition::satisfied) {
        if (in_three_range) return verdict(target, p, NilClass::exact(3), std::string(thm) + "(3)", "triple condition asserted");
        return verdict(target, p, NilClass::unknown(), std::string(thm), "condition asserted outside n_l < p <= 3 n_l / 2");
    }
    if (cond == Condition::automatic)
        return verdict(target, p, NilClass::unknown(), std::string(thm), "no oracle settles the triple condition for this type");
    return two("(2b)", "triple condition fails");
}

NilClass combine(NilClass a, NilClass b) {
    using K = NilClass::Kind;
    if (a.kind == K::unknown || b.kind == K::unknown) return NilClass::unknown();
    auto hi = [](NilClass c) { return c.kind == K::exact ? c.value : 2u; };
    auto exact_hi = [](NilClass c) { return c.kind == K::exact ? c.value : 1u; };
    // max over {1,2}-ranges: exact once some exact value reaches 2
    const unsigned lower = std::max(exact_hi(a), exact_hi(b));
    const unsigned upper = std::max(hi(a), hi(b));
    if (lower == upper) return NilClass::exact(lower);
    return NilClass::range();
}

}  // namespace

NilVerdict decide(const GroupSpec& target, std::uint32_t p, const DecideOptions& opts) {
    if (!is_prime(p)) throw Unsupported(std::to_string(p) + " is not prime");
    if (target.kind == GroupSpec::Kind::product) {
        NilVerdict v;
        v.group = target.label();
        v.prime = p;
        v.regular = true;
        v.cls = NilClass::exact(1);
        v.branch = "§1 (nil of a product is the max)";
        std::vector<Json> parts;
        for (const auto& c : target.components) {
            auto sub = decide(c, p, opts);
            v.regular = v.regular && sub.regular;
            v.cls = combine(v.cls, sub.cls);
            parts.push_back(to_json(sub));
        }
        if (target.torus_rank) parts.push_back({{"group", "T^" + std::to_string(target.torus_rank)}, {"class", 1}});
        v.reason = "maximum over factors";
        v.witnesses = parts;
        return v;
    }
    if (p == 2) {
        const bool rank_one = target.kind == GroupSpec::Kind::lie &&
                              ((target.family == LieFamily::SU && target.parameter == 2) ||
                               (target.family == LieFamily::Sp && target.parameter == 1));
        if (!rank_one) throw Unsupported("p = 2 is only tabulated for SU(2)");
        return verdict(target, p, NilClass::exact(2), "§3.1.1", "nil SU(2) at 2 is 2");
    }
    if (!is_regular(target, p)) {
        auto v = verdict(target, p, NilClass::unknown(), "§1 (regularity)",
                         target.kind == GroupSpec::Kind::raw ? "p <= n_l - n_1/2 + 1" : "p is not a regular prime");
        v.regular = false;
        return v;
    }
    switch (target.kind) {
        case GroupSpec::Kind::lie: return decide_lie(target, p);
        case GroupSpec::Kind::exotic: return decide_exotic(target, p, opts);
        case GroupSpec::Kind::raw: return decide_raw(target, p);
        default: break;
    }
    throw UnknownGroup("unsupported group specification");
}

Json to_json(const NilVerdict& v) {
    Json j;
    j["group"] = v.group;
    j["prime"] = v.prime;
    j["regular"] = v.regular;
    if (v.cls.kind == NilClass::Kind::exact)
        j["class"] = v.cls.value;
    else
        j["class"] = v.cls.to_string();
    j["branch"] = v.branch;
    j["reason"] = v.reason;
    j["witnesses"] = v.witnesses;
    return j;
}

}  // namespace nilcheck
