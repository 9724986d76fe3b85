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

// nilcheck: homotopy nilpotency of p-compact groups, and the computations behind it.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <sstream>

#include "nilcheck/decider.hpp"
#include "nilcheck/finite_group.hpp"
#include "nilcheck/invariants.hpp"
#include "nilcheck/poly_json.hpp"
#include "nilcheck/samelson.hpp"
#include "nilcheck/suites.hpp"

using namespace nilcheck;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw UsageError("--prime " + std::to_string(p) + " is not prime");
}

SphereType parse_type(const std::string& text) {
    std::vector<unsigned> degrees;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError("malformed type list '" + text + "'");
        degrees.push_back(static_cast<unsigned>(v));
    }
    try {
        return SphereType(degrees);
    } catch (const Error& e) {
        throw UsageError("malformed type list '" + text + "': " + e.what());
    }
}

std::shared_ptr<const ReflectionGroup> parse_reflection_group(const std::string& label, std::uint32_t p) {
    if (label == "H3") return std::make_shared<const ReflectionGroup>(build_coxeter_h(3, p));
    if (label == "H4") return std::make_shared<const ReflectionGroup>(build_coxeter_h(4, p));
    if (label.rfind("I2:", 0) == 0) {
        try {
            std::size_t used = 0;
            const auto n = std::stoul(label.substr(3), &used);
            if (used == label.size() - 3 && n >= 3) return std::make_shared<const ReflectionGroup>(build_dihedral(n, p));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw UsageError("unknown group label '" + label + "' (expected I2:n, H3 or H4)");
}

std::vector<unsigned> reflection_degrees(const ReflectionGroup& g) {
    if (g.family() == GroupFamily::h3) return {2, 6, 10};
    if (g.family() == GroupFamily::h4) return {2, 12, 20, 30};
    return {2, static_cast<unsigned>(g.order() / 2)};
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

void progress(const std::string& message) { std::cerr << "[nilcheck] " << message << std::endl; }

std::string verdict_text(const NilVerdict& v) {
    std::ostringstream out;
    out << "nil " << v.group << " at p = " << v.prime << ": " << v.cls.to_string() << "  [" << v.branch << "]\n";
    if (!v.reason.empty()) out << "  " << v.reason << '\n';
    if (!v.regular) out << "  (p is not a regular prime)\n";
    for (const auto& w : v.witnesses) out << "  witness " << w.dump() << '\n';
    return out.str();
}

std::string report_text(const Report& r, bool listing) {
    std::ostringstream out;
    for (const auto& c : r.checks) {
        if (listing) {
            out << r.suite << "  " << c.name << "  [" << c.citation << "]\n";
            continue;
        }
        out << (c.pass ? "PASS  " : "FAIL  ") << r.suite << "  " << c.name << "  [" << c.citation << "]\n";
        if (!c.pass) out << "        expected " << c.expected << "\n        computed " << c.computed << '\n';
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homotopy nilpotency of p-compact groups at regular primes"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output = "text";
    app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    // nil
    auto* nil = app.add_subcommand("nil", "decide the homotopy nilpotency class");
    std::vector<std::string> lie, exotic, types;
    std::uint32_t prime = 0;
    bool loop = false, certify = false;
    std::string condition = "auto";
    unsigned torus = 0;
    nil->add_option("--lie", lie, "Lie group: SU:n, Sp:n, Spin:n, G2, F4, E6, E7, E8 (repeat for products)");
    nil->add_option("--exotic", exotic, "exotic group: 2b:n, 23, 30 (repeat for products)");
    nil->add_option("--type", types, "raw type n1,...,nl (repeat for products)");
    nil->add_option("--prime", prime, "prime p")->required();
    nil->add_flag("--loop", loop, "raw types: the space is a loop space");
    nil->add_option("--condition", condition, "raw types: satisfied, unsatisfied or auto")
        ->check(CLI::IsMember({"satisfied", "unsatisfied", "auto"}));
    nil->add_option("--torus", torus, "rank of an extra torus factor");
    nil->add_flag("--certify", certify, "attach invariant-theoretic witnesses to exotic verdicts");

    // bott
    auto* bott = app.add_subcommand("bott", "p-part of Bott's Samelson order");
    std::string family;
    unsigned bi = 0, bj = 0;
    bott->add_option("family", family, "su or sp")->required()->check(CLI::IsMember({"su", "sp"}));
    bott->add_option("i", bi, "first index")->required()->check(CLI::PositiveNumber);
    bott->add_option("j", bj, "second index")->required()->check(CLI::PositiveNumber);
    bott->add_option("--prime", prime, "prime p")->required();

    // invariants
    auto* inv = app.add_subcommand("invariants", "fundamental invariants of I2:n, H3 or H4");
    std::string group;
    bool with_p1 = false;
    inv->add_option("group", group, "I2:n, H3 or H4")->required();
    inv->add_option("--prime", prime, "prime p")->required();
    inv->add_flag("--p1", with_p1, "include P^1 of every generator");

    // p1
    auto* p1 = app.add_subcommand("p1", "P^1 of a fundamental invariant, in the generators");
    std::size_t generator = 0;
    p1->add_option("group", group, "I2:n, H3 or H4")->required();
    p1->add_option("--prime", prime, "prime p")->required();
    p1->add_option("--generator", generator, "generator index (0-based)")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run regression suites");
    std::string suite;
    bool listing = false;
    verify->add_option("suite", suite, "suite name or all")->required();
    verify->add_flag("--list", listing, "list checks with citations without running them");

    // lemma21
    auto* lemma = app.add_subcommand("lemma21", "nilpotency class of a finite group from generator commutators");
    unsigned k_max = 6;
    lemma->add_option("group", group, "abelian, dihedral8, dihedral16, heisenberg3, s4")->required();
    lemma->add_option("--kmax", k_max, "largest class searched")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    const bool as_json = output == "json";

    try {
        if (*nil) {
            require_prime(prime);
            std::vector<GroupSpec> parts;
            for (const auto& l : lie) parts.push_back(parse_lie(l));
            for (const auto& x : exotic) parts.push_back(parse_exotic(x));
            const Condition c = condition == "satisfied"     ? Condition::satisfied
                                : condition == "unsatisfied" ? Condition::unsatisfied
                                                             : Condition::automatic;
            for (const auto& t : types) parts.push_back(GroupSpec::raw(parse_type(t), loop, c));
            if (parts.empty()) throw UsageError("nil needs --lie, --exotic or --type");
            const auto target = parts.size() == 1 && torus == 0 ? parts.front() : GroupSpec::product(parts, torus);
            const auto v = decide(target, prime, DecideOptions{certify});
            emit(as_json, to_json(v), verdict_text(v));
            return kOk;
        }
        if (*bott) {
            require_prime(prime);
            const bool sp = family == "sp";
            const auto nu = sp ? nu_p_factorial_ratio(2 * bi, 2 * bj, prime) : nu_p_factorial_ratio(bi, bj, prime);
            const auto nz = sp ? bott_nonzero_sp(bi, bj, prime) : bott_nonzero_su(bi, bj, prime);
            json j{{"family", family}, {"i", bi}, {"j", bj}, {"prime", prime}, {"nu_p", nu}, {"nonzero", to_string(nz)}};
            emit(as_json, j, std::to_string(nu) + '\n');
            return kOk;
        }
        if (*inv || *p1) {
            require_prime(prime);
            auto g = parse_reflection_group(group, prime);
            if (g->family() == GroupFamily::h4) progress("enumerating invariants of H4 (about a minute)");
            const auto gs = fundamental_invariants(g, reflection_degrees(*g));
            if (*inv) {
                std::ostringstream text;
                text << gs.group().label() << " over F_" << prime << ", order " << gs.group().order() << '\n';
                for (std::size_t i = 0; i < gs.size(); ++i) {
                    text << "  " << gs.name(i) << " = " << gs.generators()[i].to_string() << '\n';
                    if (with_p1) text << "  P1 " << gs.name(i) << " = " << gs.p1_expansion(i).to_string() << '\n';
                }
                emit(as_json, to_json(gs, with_p1), text.str());
                return kOk;
            }
            if (generator >= gs.size()) throw UsageError("--generator out of range");
            const auto& f = gs.p1_expansion(generator);
            json j{{"group", gs.group().label()}, {"prime", prime}, {"generator", gs.name(generator)}, {"text", f.to_string()},
                   {"expansion", to_json(f)}};
            emit(as_json, j, "P1 " + gs.name(generator) + " = " + f.to_string() + '\n');
            return kOk;
        }
        if (*verify) {
            std::vector<const Suite*> chosen;
            if (suite == "all")
                for (const auto& s : suites()) chosen.push_back(&s);
            else
                try {
                    chosen.push_back(&find_suite(suite));
                } catch (const UnknownGroup& e) {
                    throw UsageError(e.what());
                }
            bool pass = true;
            json reports = json::array();
            std::string text;
            for (const auto* s : chosen) {
                const auto r = listing ? list_suite(*s) : run_suite(*s, progress);
                pass = pass && (listing || r.pass());
                auto j = to_json(r);
                if (listing) {
                    for (auto& c : j["checks"]) c = json{{"name", c["name"]}, {"citation", c["citation"]}};
                    j.erase("pass");
                }
                reports.push_back(j);
                text += report_text(r, listing);
            }
            json j = suite == "all" ? json{{"suites", reports}} : reports.front();
            if (!listing) j["pass"] = pass;
            if (!listing) text += pass ? "all checks passed\n" : "verification FAILED\n";
            emit(as_json, j, text);
            return pass ? kOk : kFailed;
        }
        if (*lemma) {
            const auto g = named_group(group);
            const auto lemma_cls = nilpotency_class(g, k_max);
            const auto oracle_cls = nilpotency_class_oracle(g, k_max);
            auto show = [&](std::optional<unsigned> k) {
                return k ? json(*k) : json("not nilpotent of class <= " + std::to_string(k_max));
            };
            json j{{"group", g.name()}, {"order", g.order()}, {"class", show(lemma_cls)}, {"all_tuples", show(oracle_cls)},
                   {"agree", lemma_cls == oracle_cls}};
            std::string text = g.name() + " (order " + std::to_string(g.order()) + "): " +
                               (lemma_cls ? "class " + std::to_string(*lemma_cls) : "not nilpotent of class <= " + std::to_string(k_max)) +
                               (lemma_cls == oracle_cls ? "" : "  (disagrees with the all-tuples search)") + '\n';
            emit(as_json, j, text);
            return lemma_cls == oracle_cls ? kOk : kFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "nilcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const VerificationFailure& e) {
        std::cerr << "nilcheck: " << e.what() << '\n';
        return kFailed;
    } catch (const Error& e) {
        std::cerr << "nilcheck: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
