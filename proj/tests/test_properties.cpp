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

// Randomized properties; every generator is seeded so failures reproduce.

#include <doctest.h>

#include <algorithm>

#include "nilcheck/errors.hpp"
#include "nilcheck/cohomology.hpp"
#include "nilcheck/decider.hpp"
#include "nilcheck/finite_group.hpp"
#include "nilcheck/invariants.hpp"
#include "nilcheck/kernels.hpp"
#include "nilcheck/poly_json.hpp"
#include "nilcheck/samelson.hpp"
#include "nilcheck/sampling.hpp"
#include "nilcheck/steenrod.hpp"
#include "nilcheck/symmetric.hpp"

using namespace nilcheck;

TEST_CASE("field axioms") {
    Sampler s(1);
    for (std::uint32_t p : {2u, 3u, 11u, 23u, 37u, 65521u}) {
        for (int i = 0; i < 300; ++i) {
            const FpElement a(s.element(p), p), b(s.element(p), p), c(s.element(p), p);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == FpElement(0, p));
            if (a.value) CHECK(a * fp_inv(a) == FpElement(1, p));
        }
    }
}

TEST_CASE("ring axioms for polynomials") {
    Sampler s(2);
    const auto ctx = make_context({"x", "y", "z"}, {2, 4, 6});
    for (int i = 0; i < 60; ++i) {
        const auto f = s.polynomial(ctx, 13, 3, 4), g = s.polynomial(ctx, 13, 3, 4), h = s.polynomial(ctx, 13, 3, 4);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * g == multiply_sparse(f, g));
    }
}

TEST_CASE("P1 is a derivation, natural, and shifts degree by 2(p-1)") {
    Sampler s(3);
    const std::uint32_t p = 11;
    for (std::size_t n : {2u, 3u, 4u}) {
        const auto t = t_context(n);
        for (int i = 0; i < 200; ++i) {
            const auto f = s.polynomial(t, p, 4, 4), g = s.polynomial(t, p, 4, 4);
            CHECK(steenrod_p1(f * g) == steenrod_p1(f) * g + f * steenrod_p1(g));
            const auto m = s.invertible(n, p);
            CHECK(steenrod_p1(apply_matrix(f, m)) == apply_matrix(steenrod_p1(f), m));
            const auto h = s.homogeneous(t, p, 1 + s.below(5), 3);
            const auto ph = steenrod_p1(h);
            if (!ph.is_zero()) CHECK(ph.homogeneous_degree() == *h.homogeneous_degree() + 2 * static_cast<int>(p - 1));
        }
    }
}

TEST_CASE("normal forms are idempotent and ring maps multiplicative") {
    Sampler s(4);
    for (const auto& map : {e7_pi(), e7_pi_prime(), e8_pi(), e8_pi_prime()}) {
        const auto& src = map.source();
        const auto p = map.target().prime();
        for (int i = 0; i < 40; ++i) {
            const auto f = s.polynomial(src, p, 3, 3), g = s.polynomial(src, p, 3, 3);
            const auto ff = map.apply(f);
            CHECK(map.target().normal_form(ff) == ff);
            CHECK(map.apply(f * g) == map.target().multiply(ff, map.apply(g)));
            CHECK(map.apply(f + g) == ff + map.apply(g));
        }
    }
}

TEST_CASE("Girard agrees with expansion in t for small arity") {
    for (std::uint32_t p : {23u, 37u}) {
        for (unsigned n = 1; n <= 4; ++n) {
            std::vector<GradedPoly> classes;
            for (unsigned k = 1; k <= n; ++k) classes.push_back(pontryagin_class(k, n, p));
            for (unsigned k = 1; k <= 10; ++k) CHECK(girard_expand(k, n, p).substitute(classes) == power_sum(k, n, p));
        }
    }
}

TEST_CASE("Girard agrees with the pc conversion up to arity 8") {
    for (std::uint32_t p : {23u, 37u}) {
        for (unsigned n = 5; n <= 8; ++n) {
            const auto pc = pc_context(n);
            std::vector<GradedPoly> images;
            for (unsigned i = 1; i < n; ++i) images.push_back(GradedPoly::variable(pc, p, i - 1));
            images.push_back(GradedPoly::variable(pc, p, n - 1).pow(2));
            for (unsigned k = 1; k <= 22; ++k) CHECK(girard_expand(k, n, p).substitute(images) == to_pc_basis(power_sum(k, n, p), n));
        }
    }
}

TEST_CASE("pc conversion round trips") {
    Sampler s(5);
    for (unsigned n : {2u, 3u, 5u, 6u}) {
        const auto pc = pc_context(n);
        for (int i = 0; i < 15; ++i) {
            const auto g = s.polynomial(pc, 23, 3, 4);
            CHECK(to_pc_basis(from_pc_basis(g), n) == g);
        }
    }
}

TEST_CASE("P1 of power sums") {
    Sampler s(6);
    for (int i = 0; i < 30; ++i) {
        const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11, 13}[s.below(5)];
        const unsigned n = 1 + s.below(4), k = 1 + s.below(8);
        CHECK(steenrod_p1(power_sum(k, n, p)) == p1_power_sum(k, n, p));
    }
}

TEST_CASE("Reynolds operator properties") {
    Sampler s(7);
    std::vector<ReflectionGroup> groups{build_dihedral(4, 5), build_dihedral(5, 11), build_dihedral(6, 13), build_coxeter_h(3, 11)};
    for (const auto& g : groups) {
        const auto t = t_context(g.dimension());
        for (int i = 0; i < 8; ++i) {
            const auto f = s.polynomial(t, g.prime(), 6, 4);
            const auto r = reynolds(g, f);
            CHECK(reynolds(g, r) == r);
            CHECK(is_invariant(g, r));
            for (const auto& m : g.generators()) CHECK(apply_matrix(r, m) == r);
        }
    }
}

TEST_CASE("H3 invariant dimensions match the Hilbert series") {
    const auto g = build_coxeter_h(3, 11);
    for (unsigned d = 0; d <= 12; ++d) CHECK(invariant_dimension(g, d) == hilbert_coefficient({2, 6, 10}, d));
}

TEST_CASE("H3 y2 y10 coefficient is stable under decomposable changes of y10") {
    const auto base = fundamental_invariants(std::make_shared<const ReflectionGroup>(build_coxeter_h(3, 11)), {2, 6, 10});
    const auto a = generator_coefficient(base, base.p1_expansion(0), {{0, 1}, {2, 1}});
    REQUIRE(a != 0);
    Sampler s(8);
    const auto& y = base.generators();
    for (int i = 0; i < 20; ++i) {
        const auto alpha = static_cast<std::int64_t>(s.element(11)), beta = static_cast<std::int64_t>(s.element(11));
        const auto y10 = y[2] + y[0].pow(5).scaled(alpha) + (y[0].pow(2) * y[1]).scaled(beta);
        GeneratorSet changed(base.group_ptr(), {y[0], y[1], y10});
        CHECK(generator_coefficient(changed, changed.p1_expansion(0), {{0, 1}, {2, 1}}) == a);
    }
}

namespace {

// p-adic valuation of the exact integer (i+j-1)! / ((i-1)! (j-1)!).
std::uint64_t exact_ratio_part(unsigned i, unsigned j, std::uint32_t p) {
    unsigned __int128 r = 1;
    for (unsigned m = j; m <= i + j - 1; ++m) r *= m;
    for (unsigned m = 2; m < i; ++m) r /= m;  // exact: every prefix of (i-1)! divides the product
    std::uint64_t out = 1;
    while (r % p == 0) r /= p, out *= p;
    return out;
}

}  // namespace

TEST_CASE("Legendre valuations agree with exact factorial ratios") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u})
        for (unsigned i = 1; i < 28; ++i)
            for (unsigned j = 1; i + j <= 28; ++j) CHECK(nu_p_factorial_ratio(i, j, p) == exact_ratio_part(i, j, p));
}

TEST_CASE("p_homotopy never reports both answers") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (unsigned i = 1; i < 6 * p; ++i) {
            const auto a = p_homotopy(3, i, p);
            if (i == 2 * p - 3) CHECK(a == HomotopyAnswer::cyclic_p);
            else if (i <= 4 * p - 7) CHECK(a == HomotopyAnswer::zero);
            else CHECK(a == HomotopyAnswer::unknown);
        }
}

TEST_CASE("table branch agrees with the Bott witness search") {
    for (unsigned n = 2; n <= 20; ++n) {
        SphereType type([&] {
            std::vector<unsigned> d;
            for (unsigned k = 2; k <= n; ++k) d.push_back(k);
            return d;
        }());
        for (std::uint32_t p = n + 1; 2 * p <= 3 * n; ++p) {
            if (!is_prime(p)) continue;
            INFO("SU(" << n << ") at " << p);
            CHECK(decide(GroupSpec::lie(LieFamily::SU, n), p).cls == NilClass::exact(3));
            CHECK(triple_condition(type, p, bott_oracle_su(type, p)).satisfied);
        }
    }
    for (unsigned n = 1; n <= 10; ++n) {
        SphereType type([&] {
            std::vector<unsigned> d;
            for (unsigned k = 1; k <= n; ++k) d.push_back(2 * k);
            return d;
        }());
        for (std::uint32_t p = 2 * n + 1; 2 * p <= 3 * 2 * n; ++p) {
            if (!is_prime(p)) continue;
            INFO("Sp(" << n << ") at " << p);
            CHECK(decide(GroupSpec::lie(LieFamily::Sp, n), p).cls == NilClass::exact(3));
            CHECK(triple_condition(type, p, bott_oracle_sp(type, p)).satisfied);
        }
    }
}

TEST_CASE("triple condition is monotone in the oracle") {
    Sampler s(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<unsigned> d{2};
        while (d.size() < 2 + s.below(5)) d.push_back(d.back() + 1 + s.below(4));
        SphereType type(d);
        const std::uint32_t p = std::vector<std::uint32_t>{5, 7, 11, 13, 17}[s.below(5)];
        const std::uint64_t mask = (static_cast<std::uint64_t>(s.below(1u << 30)) << 30) | s.below(1u << 30);
        auto weak = [&](unsigned a, unsigned b, unsigned t) {
            return (mask >> ((a * 7 + b * 3 + t) % 60)) & 1 ? Nontriviality::yes : Nontriviality::inconclusive;
        };
        auto strong = [&](unsigned a, unsigned b, unsigned t) {
            return weak(a, b, t) == Nontriviality::yes || (a + t) % 2 ? Nontriviality::yes : Nontriviality::inconclusive;
        };
        if (triple_condition(type, p, weak).satisfied) CHECK(triple_condition(type, p, strong).satisfied);
    }
}

TEST_CASE("products take the maximum of their factors") {
    Sampler s(10);
    const std::vector<GroupSpec> pool{parse_lie("SU:4"), parse_lie("SU:6"), parse_lie("SU:8"), parse_lie("Sp:3"),
                                      parse_lie("G2"), parse_exotic("23"), parse_exotic("2b:6")};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<GroupSpec> parts;
        for (unsigned k = 0; k < 1 + s.below(3); ++k) parts.push_back(pool[s.below(static_cast<unsigned>(pool.size()))]);
        const std::uint32_t p = std::vector<std::uint32_t>{11, 13, 17}[s.below(3)];
        unsigned best = 1;
        bool unknown = false;
        for (const auto& g : parts) {
            const auto v = decide(g, p);
            if (v.cls.kind != NilClass::Kind::exact) unknown = true;
            else best = std::max(best, v.cls.value);
        }
        const auto v = decide(GroupSpec::product(parts, s.below(2)), p);
        if (unknown) CHECK(v.cls.kind != NilClass::Kind::exact);
        else CHECK(v.cls == NilClass::exact(best));
    }
}

TEST_CASE("generator commutator test agrees with the all-tuples search on random subgroups") {
    Sampler s(11);
    const auto d16 = named_group("dihedral16");
    const auto heis = named_group("heisenberg3");
    for (const auto* g : {&d16, &heis}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Matrix> gens;
            for (unsigned k = 0; k < 1 + s.below(3); ++k) gens.push_back(g->elements()[s.below(static_cast<unsigned>(g->order()))]);
            FiniteGroupHandle h("sub", gens);
            for (unsigned k = 1; k <= 4; ++k) CHECK(nilpotency_class(h, k) == nilpotency_class_oracle(h, k));
        }
    }
    for (const auto& name : named_groups())
        for (unsigned k = 1; k <= 6; ++k) CHECK(nilpotency_class(named_group(name), k) == nilpotency_class_oracle(named_group(name), k));
}

TEST_CASE("kernels: serial and parallel paths agree on random input") {
    Sampler s(12);
    for (int trial = 0; trial < 10; ++trial) {
        const std::uint32_t p = 31;
        const auto ctx = t_context(2 + s.below(3));
        const auto a = kernels::to_dense(s.homogeneous(ctx, p, 2 + s.below(8), 30));
        const auto b = kernels::to_dense(s.homogeneous(ctx, p, 2 + s.below(8), 30));
        CHECK(kernels::dense_mul_serial(a, b, p).c == kernels::dense_mul_parallel(a, b, p).c);
    }
}

TEST_CASE("JSON output is a stable round trip") {
    Sampler s(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = s.polynomial(make_context({"a", "b'", "c_3"}, {4, 8, 12}), 37, 5, 6);
        const auto text = to_json(f).dump();
        CHECK(poly_from_json(nlohmann::json::parse(text)) == f);
        CHECK(to_json(poly_from_json(nlohmann::json::parse(text))).dump() == text);
    }
}
