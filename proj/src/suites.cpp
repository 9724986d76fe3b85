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

#include "nilcheck/suites.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <mutex>

#include "nilcheck/cohomology.hpp"
#include "nilcheck/decider.hpp"
#include "nilcheck/finite_group.hpp"
#include "nilcheck/invariants.hpp"
#include "nilcheck/samelson.hpp"
#include "nilcheck/sampling.hpp"
#include "nilcheck/steenrod.hpp"
#include "nilcheck/symmetric.hpp"

namespace nilcheck {

Outcome Outcome::of(const GradedPoly& expected, const GradedPoly& computed) {
    return {expected.to_string(), computed.to_string(), expected == computed};
}

Outcome Outcome::of(bool expected, bool computed) {
    auto s = [](bool b) { return std::string(b ? "true" : "false"); };
    return {s(expected), s(computed), expected == computed};
}

void Checklist::check(std::string name, std::string citation, const std::function<Outcome()>& body) {
    if (listing_) {
        results_.push_back({std::move(name), std::move(citation), "", "", false, 0});
        return;
    }
    note(name);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {"no error", std::string("error: ") + e.what(), false};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results_.push_back({std::move(name), std::move(citation), std::move(o.expected), std::move(o.computed), o.pass, seconds});
}

void Checklist::adopt(const std::function<Report()>& run) {
    const auto r = run();
    for (auto c : r.checks) {
        if (listing_) c.expected = c.computed = "", c.pass = false;
        results_.push_back(std::move(c));
    }
}

void Checklist::note(const std::string& message) const {
    if (progress_) progress_(message);
}

namespace {

std::string join(const std::vector<unsigned>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

Outcome count_outcome(std::size_t failures, std::size_t total) {
    return {std::to_string(total) + "/" + std::to_string(total),
            std::to_string(total - failures) + "/" + std::to_string(total), failures == 0};
}

// Invariant computations shared between checks of one run.
template <class Key>
class Memo {
  public:
    const GeneratorSet& get(const Key& key, const std::function<GeneratorSet()>& make) {
        std::lock_guard lock(mu_);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, make()).first;
        return it->second;
    }

  private:
    std::mutex mu_;
    std::map<Key, GeneratorSet> cache_;
};

const GeneratorSet& dihedral_invariants(unsigned n, std::uint32_t p) {
    static Memo<std::pair<unsigned, std::uint32_t>> memo;
    return memo.get({n, p}, [&] {
        return fundamental_invariants(std::make_shared<const ReflectionGroup>(build_dihedral(n, p)), {2, n});
    });
}

const GeneratorSet& coxeter_invariants(unsigned rank, std::uint32_t p) {
    static Memo<std::pair<unsigned, std::uint32_t>> memo;
    return memo.get({rank, p}, [&] {
        const std::vector<unsigned> degrees = rank == 3 ? std::vector<unsigned>{2, 6, 10} : std::vector<unsigned>{2, 12, 20, 30};
        return fundamental_invariants(std::make_shared<const ReflectionGroup>(build_coxeter_h(rank, p)), degrees);
    });
}

GradedPoly in_vars(const GeneratorSet& gs, const std::string& text) {
    return parse_poly(gs.variables(), gs.group().prime(), text);
}

// ---------------------------------------------------------------------------

void plan_girard(Checklist& c) {
    for (std::uint32_t p : {23u, 37u}) {
        for (unsigned n = 1; n <= 8; ++n) {
            c.check("Girard s_k in p_1..p_" + std::to_string(n) + ", k <= 22, p = " + std::to_string(p), "Eq. (Girard)", [=] {
                const auto pc = pc_context(n);
                std::vector<GradedPoly> images;
                for (unsigned i = 1; i < n; ++i) images.push_back(GradedPoly::variable(pc, p, i - 1));
                images.push_back(GradedPoly::variable(pc, p, n - 1).pow(2));
                std::size_t failures = 0;
                for (unsigned k = 1; k <= 22; ++k) {
                    const auto girard = girard_expand(k, n, p).substitute(images);
                    if (!(girard == to_pc_basis(power_sum(k, n, p), n))) ++failures;
                }
                return count_outcome(failures, 22);
            });
        }
    }
}

void plan_i2(Checklist& c) {
    for (unsigned n : {4u, 6u, 10u, 12u, 16u, 18u, 22u, 28u}) {
        const std::uint32_t p = n + 1;
        const std::string tag = "I2(" + std::to_string(n) + ") at p = " + std::to_string(p);
        const std::string xn = "x" + std::to_string(n);
        c.check(tag + ": |G| = 2n", "closure", [=] {
            return Outcome::equal<std::size_t>(2 * n, dihedral_invariants(n, p).group().order());
        });
        c.check(tag + ": generators t1 t2, t1^n + t2^n", "Eq. (I_2(n)-1)", [=] {
            const auto& gs = dihedral_invariants(n, p);
            const auto t = t_context(2);
            const bool ok = gs.generators().at(0) == parse_poly(t, p, "t1*t2") &&
                            gs.generators().at(1) == parse_poly(t, p, "t1^" + std::to_string(n) + " + t2^" + std::to_string(n));
            return Outcome{"t1*t2, t1^" + std::to_string(n) + " + t2^" + std::to_string(n),
                           gs.generators().at(0).to_string() + ", " + gs.generators().at(1).to_string(), ok};
        });
        c.check(tag + ": P1 x2 = x2 " + xn, "Eq. (I_2(n)-1)", [=] {
            const auto& gs = dihedral_invariants(n, p);
            return Outcome::of(in_vars(gs, "x2*" + xn), gs.p1_expansion(0));
        });
        c.check(tag + ": P1 " + xn + " = 2 x2^n - " + xn + "^2", "Eq. (I_2(n)-1), P1 of the second generator", [=] {
            const auto& gs = dihedral_invariants(n, p);
            return Outcome::of(in_vars(gs, "2*x2^" + std::to_string(n) + " - " + xn + "^2"), gs.p1_expansion(1));
        });
        c.check(tag + ": condition satisfied", "Eq. (invariant-P^1)", [=] {
            return Outcome::of(true, check_condition(dihedral_invariants(n, p)).satisfied);
        });
    }
}

void plan_i2_5(Checklist& c) {
    c.check("I2(5) at p = 11: P1 x2 = x2 x5^2 - 2 x2^6", "Eq. (I_2(n)-2)", [] {
        const auto& gs = dihedral_invariants(5, 11);
        return Outcome::of(in_vars(gs, "x2*x5^2 - 2*x2^6"), gs.p1_expansion(0));
    });
    const std::vector<std::pair<std::size_t, unsigned>> x2sq{{0, 2}};
    c.check("I2(5) at p = 31: P1 x2 = x2 x5^6 mod (x2^2)", "Eq. (I_2(n)-3)", [=] {
        const auto& gs = dihedral_invariants(5, 31);
        return Outcome::of(in_vars(gs, "x2*x5^6"), reduce_mod_monomials(gs.p1_expansion(0), x2sq));
    });
    c.check("I2(5) at p = 31: P1 x5 = 5 x5^7 mod (x2^2)", "Eq. (I_2(n)-3)", [=] {
        const auto& gs = dihedral_invariants(5, 31);
        return Outcome::of(in_vars(gs, "5*x5^7"), reduce_mod_monomials(gs.p1_expansion(1), x2sq));
    });
    c.check("I2(5) at p = 31: P1 x5 in full", "Eq. (I_2(n)-3), two-variable Newton recursion", [] {
        const auto& gs = dihedral_invariants(5, 31);
        return Outcome::of(in_vars(gs, "5*x5^7 - 35*x2^5*x5^5 + 70*x2^10*x5^3 - 35*x2^15*x5"), gs.p1_expansion(1));
    });
}

void plan_h3(Checklist& c) {
    c.check("H3 at p = 11: |G| = 120", "closure", [] {
        return Outcome::equal<std::size_t>(120, coxeter_invariants(3, 11).group().order());
    });
    c.check("H3 at p = 11: generator degrees (2,6,10)", "§4.2", [] {
        return Outcome{"(2,6,10)", join(coxeter_invariants(3, 11).half_degrees()), true};
    });
    c.check("H3 at p = 11: y2 y10 coefficient of P1 y2 nonzero", "§4.2, a != 0", [] {
        const auto& gs = coxeter_invariants(3, 11);
        const auto a = generator_coefficient(gs, gs.p1_expansion(0), {{0, 1}, {2, 1}});
        return Outcome{"nonzero", std::to_string(a), a != 0};
    });
    c.check("H3 at p = 11: condition satisfied", "§4.2", [] {
        return Outcome::of(true, check_condition(coxeter_invariants(3, 11)).satisfied);
    });
    const std::vector<std::pair<std::size_t, unsigned>> ideal{{0, 2}, {1, 1}};
    c.check("H3 at p = 31: P1 y2 = a y2 y10^3 mod (y2^2, y6), a != 0", "Eq. (y_10)", [=] {
        const auto& gs = coxeter_invariants(3, 31);
        const auto r = reduce_mod_monomials(gs.p1_expansion(0), ideal);
        const auto a = generator_coefficient(gs, r, {{0, 1}, {2, 3}});
        return Outcome{"a*y2*y10^3, a != 0", r.to_string(), a != 0 && r == in_vars(gs, "y2*y10^3").scaled(a)};
    });
    c.check("H3 at p = 31: P1 y10 = 10 a y10^4 mod (y2^2, y6)", "Eq. (y_10), normalized by i(y10) = x5^2 + ...", [=] {
        const auto& gs = coxeter_invariants(3, 31);
        const auto a = generator_coefficient(gs, gs.p1_expansion(0), {{0, 1}, {2, 3}});
        return Outcome::of(in_vars(gs, "y10^4").scaled(10 * static_cast<std::int64_t>(a)),
                           reduce_mod_monomials(gs.p1_expansion(2), ideal));
    });
}

void plan_h4(Checklist& c) {
    c.check("H4 at p = 31: |G| = 14400", "closure", [] {
        return Outcome::equal<std::size_t>(14400, build_coxeter_h(4, 31).order());
    });
    c.check("H4 at p = 31: generator degrees (2,12,20,30)", "§4.3", [] {
        return Outcome{"(2,12,20,30)", join(coxeter_invariants(4, 31).half_degrees()), true};
    });
    c.check("H4 at p = 31: b != 0 or c != 0 in P1 z2", "§4.3", [] {
        const auto s = h4_case_split(coxeter_invariants(4, 31));
        return Outcome{"b != 0 or c != 0", "b = " + std::to_string(s.b) + ", c = " + std::to_string(s.c), s.b != 0 || s.c != 0};
    });
    c.check("H4 at p = 31: d != 0 in P1 z20 when b = 0", "§4.3, hence d != 0", [] {
        const auto s = h4_case_split(coxeter_invariants(4, 31));
        const std::string got = s.b != 0 ? "b != 0, not needed" : "d = " + (s.d ? std::to_string(*s.d) : std::string("?"));
        return Outcome{"b != 0 or d != 0", got, s.satisfied()};
    });
    c.check("H4 at p = 31: condition satisfied", "§4.3", [] {
        return Outcome::of(true, check_condition(coxeter_invariants(4, 31)).satisfied);
    });
}

std::uint64_t direct_ratio_part(unsigned i, unsigned j, std::uint32_t p) {
    // Factor every integer of (i+j-1)! / ((i-1)! (j-1)!) = j (j+1) ... (i+j-1) / (i-1)!
    auto v = [&](std::uint64_t m) {
        unsigned e = 0;
        while (m % p == 0) m /= p, ++e;
        return e;
    };
    long e = 0;
    for (unsigned m = j; m <= i + j - 1; ++m) e += v(m);
    for (unsigned m = 2; m < i; ++m) e -= v(m);
    std::uint64_t out = 1;
    while (e-- > 0) out *= p;
    return out;
}

void plan_bott(Checklist& c) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u}) {
        c.check("Legendre valuation = factorization, i + j <= 40, p = " + std::to_string(p), "Eq. (Bott)", [=] {
            std::size_t failures = 0, total = 0;
            for (unsigned i = 1; i < 40; ++i)
                for (unsigned j = 1; i + j <= 40; ++j, ++total)
                    if (nu_p_factorial_ratio(i, j, p) != direct_ratio_part(i, j, p)) ++failures;
            return count_outcome(failures, total);
        });
    }
    c.check("nu_11(11!/(7! 3!)) = 11", "Eq. (Bott)", [] { return Outcome::equal<std::uint64_t>(11, nu_p_factorial_ratio(8, 4, 11)); });
    c.check("nu_5(3!) = 1", "Eq. (Bott)", [] { return Outcome::equal<std::uint64_t>(1, nu_p_factorial_ratio(2, 2, 5)); });
    for (unsigned n = 2; n <= 20; ++n) {
        c.check("SU(" + std::to_string(n) + "): <e_n, e_{p-n+1}> nonzero for n < p <= 3n/2", "§3.1.1", [=] {
            std::size_t failures = 0, total = 0;
            for (std::uint32_t p = n + 1; 2 * p <= 3 * n; ++p) {
                if (!is_prime(p)) continue;
                ++total;
                if (bott_nonzero_su(n, p - n + 1, p) != Nontriviality::yes) ++failures;
                SphereType type([&] {
                    std::vector<unsigned> d;
                    for (unsigned k = 2; k <= n; ++k) d.push_back(k);
                    return d;
                }());
                if (!triple_condition(type, p, bott_oracle_su(type, p)).satisfied) ++failures;
            }
            return count_outcome(failures, total);
        });
    }
    c.check("bott_nonzero_su(8, 6, 11) = yes", "§3.1.1", [] {
        return Outcome{"yes", to_string(bott_nonzero_su(8, 6, 11)), bott_nonzero_su(8, 6, 11) == Nontriviality::yes};
    });
    c.check("bott_nonzero_sp(3, 1, 7) = yes", "§3.1.2", [] {
        return Outcome{"yes", to_string(bott_nonzero_sp(3, 1, 7)), bott_nonzero_sp(3, 1, 7) == Nontriviality::yes};
    });
    c.check("SU(6) at p = 11: triple condition fails", "Theorem 1.3(2)", [] {
        SphereType type({2, 3, 4, 5, 6});
        return Outcome::of(false, triple_condition(type, 11, bott_oracle_su(type, 11)).satisfied);
    });
}

struct Expected {
    std::string label;
    GroupSpec target;
    std::uint32_t p;
    unsigned cls;
    std::string branch;
};

void plan_decider(Checklist& c) {
    const std::vector<Expected> table{
        {"SU(4)", parse_lie("SU:4"), 11, 1, "Theorem 2.4(1)"},
        {"SU(6)", parse_lie("SU:6"), 11, 2, "Theorem 1.3(2)"},
        {"SU(8)", parse_lie("SU:8"), 11, 3, "Theorem 1.3(1)"},
        {"SU(7)", parse_lie("SU:7"), 7, 3, "§3.1.1"},
        {"SU(2)", parse_lie("SU:2"), 2, 2, "§3.1.1"},
        {"F4", parse_lie("F4"), 17, 2, "Theorem 1.3(2)"},
        {"E8", parse_lie("E8"), 41, 2, "Theorem 1.3(2)"},
        {"E8", parse_lie("E8"), 43, 2, "Theorem 1.3(2)"},
        {"E7", parse_lie("E7"), 23, 3, "§3.2.1"},
        {"E8", parse_lie("E8"), 37, 3, "§3.2.2"},
        {"G2", parse_lie("G2"), 7, 3, "§3 (Hamanaka-Kono)"},
        {"F4", parse_lie("F4"), 13, 3, "§3 (Hamanaka-Kono)"},
        {"E6", parse_lie("E6"), 13, 3, "§3 (Hamanaka-Kono)"},
        {"E7", parse_lie("E7"), 19, 3, "§3 (Hamanaka-Kono)"},
        {"E8", parse_lie("E8"), 31, 3, "§3 (Hamanaka-Kono)"},
        {"Spin(11)", parse_lie("Spin:11"), 11, 3, "§3.1.3"},
        {"2b(12)", parse_exotic("2b:12"), 13, 3, "Theorem 1.4(3)"},
        {"CE23", parse_exotic("23"), 11, 3, "Theorem 1.4(3)"},
        {"CE30", parse_exotic("30"), 31, 3, "Theorem 1.4(3)"},
        {"CE23", parse_exotic("23"), 13, 2, "Theorem 1.4(2)"},
        {"CE23", parse_exotic("23"), 23, 1, "Theorem 1.4(1)"},
    };
    for (const auto& e : table) {
        c.check("nil " + e.label + " at p = " + std::to_string(e.p), e.branch, [e] {
            const auto v = decide(e.target, e.p);
            const std::string want = std::to_string(e.cls) + " [" + e.branch + "]";
            const std::string got = v.cls.to_string() + " [" + v.branch + "]";
            return Outcome{want, got, v.cls == NilClass::exact(e.cls) && v.branch == e.branch};
        });
    }
    c.check("nil SU(8) at p = 11 carries a Bott witness", "§3.1.1", [] {
        const auto v = decide(parse_lie("SU:8"), 11);
        return Outcome{"nonempty", v.witnesses.dump(), !v.witnesses.empty()};
    });
}

void plan_lemma21(Checklist& c) {
    const std::map<std::string, unsigned> known{{"abelian", 1}, {"dihedral8", 2}, {"dihedral16", 3}, {"heisenberg3", 2}};
    for (const auto& [name, cls] : known) {
        c.check(name + ": generator tuples agree with all tuples", "Lemma 2.1", [name = name, cls = cls] {
            const auto g = named_group(name);
            const auto lemma = nilpotency_class(g, 6);
            const auto oracle = nilpotency_class_oracle(g, 6);
            auto s = [](std::optional<unsigned> k) { return k ? std::to_string(*k) : std::string("not within 6"); };
            return Outcome{std::to_string(cls) + " / " + std::to_string(cls), s(lemma) + " / " + s(oracle),
                           lemma == oracle && lemma == cls};
        });
    }
    c.check("s4: not nilpotent of class <= k for every k <= 6", "Lemma 2.1", [] {
        const auto g = named_group("s4");
        std::size_t failures = 0;
        for (unsigned k = 1; k <= 6; ++k)
            if (nilpotency_class(g, k) || nilpotency_class_oracle(g, k)) ++failures;
        return count_outcome(failures, 6);
    });
}

void plan_steenrod(Checklist& c) {
    constexpr std::uint32_t p = 11;
    constexpr unsigned instances = 200;
    const auto t = t_context(3);
    c.check("P1(fg) = P1(f) g + f P1(g), 200 instances over F_11", "derivation law", [=] {
        Sampler s(0x5eed0001);
        std::size_t failures = 0;
        for (unsigned i = 0; i < instances; ++i) {
            const auto f = s.polynomial(t, p, 4, 4), g = s.polynomial(t, p, 4, 4);
            if (!(steenrod_p1(f * g) == steenrod_p1(f) * g + f * steenrod_p1(g))) ++failures;
        }
        return count_outcome(failures, instances);
    });
    c.check("P1(f o M) = P1(f) o M, 200 instances over F_11", "naturality under linear substitution", [=] {
        Sampler s(0x5eed0002);
        std::size_t failures = 0;
        for (unsigned i = 0; i < instances; ++i) {
            const auto f = s.polynomial(t, p, 4, 4);
            const auto m = s.invertible(3, p);
            if (!(steenrod_p1(apply_matrix(f, m)) == apply_matrix(steenrod_p1(f), m))) ++failures;
        }
        return count_outcome(failures, instances);
    });
    c.check("deg P1 f = deg f + 2(p - 1) on homogeneous f", "degree shift", [=] {
        Sampler s(0x5eed0003);
        std::size_t failures = 0;
        for (unsigned i = 0; i < instances; ++i) {
            const auto f = s.homogeneous(t, p, 1 + s.below(6), 4);
            const auto g = steenrod_p1(f);
            if (g.is_zero()) continue;
            if (!g.homogeneous_degree() || *g.homogeneous_degree() != *f.homogeneous_degree() + 2 * static_cast<int>(p - 1))
                ++failures;
        }
        return count_outcome(failures, instances);
    });
}

}  // namespace

const std::vector<Suite>& suites() {
    static const std::vector<Suite> all{
        {"girard", "power sums in Pontryagin classes", plan_girard},
        {"i2", "dihedral groups I2(n) at p = n + 1", plan_i2},
        {"i2-5", "I2(5) at p = 11 and p = 31", plan_i2_5},
        {"h3", "H3 at p = 11 and p = 31", plan_h3},
        {"h4", "H4 at p = 31", plan_h4},
        {"e7", "E7 at p = 23", [](Checklist& c) { c.adopt(verify_e7); }},
        {"e8", "E8 at p = 37",
         [](Checklist& c) {
             c.adopt(verify_e8_pi);
             c.adopt(verify_e8_phi);
         }},
        {"bott", "Samelson orders in SU(n) and Sp(n)", plan_bott},
        {"decider", "nilpotency class regression", plan_decider},
        {"lemma21", "nilpotency of finite groups from generators", plan_lemma21},
        {"steenrod", "properties of P1", plan_steenrod},
    };
    return all;
}

const Suite& find_suite(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return s;
    throw UnknownGroup("unknown suite '" + name + "'");
}

Report run_suite(const Suite& suite, const Checklist::Progress& progress) {
    const auto start = std::chrono::steady_clock::now();
    Checklist c(false, progress ? [&](const std::string& m) { progress(suite.name + ": " + m); } : Checklist::Progress{});
    suite.plan(c);
    Report r;
    r.suite = suite.name;
    r.checks = std::move(c.results());
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report list_suite(const Suite& suite) {
    Checklist c(true, {});
    suite.plan(c);
    Report r;
    r.suite = suite.name;
    r.checks = std::move(c.results());
    return r;
}

}  // namespace nilcheck
