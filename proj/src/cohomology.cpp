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

#include "nilcheck/cohomology.hpp"

#include <chrono>
#include <functional>

#include "nilcheck/steenrod.hpp"
#include "nilcheck/symmetric.hpp"

namespace nilcheck {

namespace {

constexpr std::uint32_t kE7Prime = 23;
constexpr std::uint32_t kE8Prime = 37;

ContextPtr e7_ring() {
    static const auto ctx = make_context({"p1", "p2", "p3", "p4", "c5", "a", "b"}, {4, 8, 12, 16, 10, 0, 0});
    return ctx;
}

std::map<std::string, GradedPoly> images_from_text(const ContextPtr& target, std::uint32_t p,
                                                   const std::vector<std::pair<std::string, std::string>>& text) {
    std::map<std::string, GradedPoly> out;
    for (const auto& [name, expr] : text) out.emplace(name, parse_poly(target, p, expr));
    return out;
}

RingMap make_map(const ContextPtr& source, std::vector<std::string> names, std::vector<int> degrees, std::uint32_t p,
                 const std::vector<std::string>& relations, std::map<std::string, unsigned> bounds,
                 const std::vector<std::pair<std::string, std::string>>& images) {
    auto ctx = make_context(std::move(names), std::move(degrees));
    std::vector<GradedPoly> rels;
    for (const auto& r : relations) rels.push_back(parse_poly(ctx, p, r));
    auto q = QuotientPresentation::from_relations(ctx, p, rels, std::move(bounds));
    return RingMap(source, q, images_from_text(ctx, p, images));
}

// Value expected in the target ring, brought to normal form.
GradedPoly expect(const RingMap& m, const std::string& text) {
    const auto& q = m.target();
    return q.normal_form(parse_poly(q.context(), q.prime(), text));
}

// P^1 of a polynomial in p1..p(n-1), cn, moved into `ring` by variable names.
GradedPoly p1_of(const std::string& text, unsigned n, std::uint32_t p, const ContextPtr& ring) {
    return pc_steenrod_p1(parse_poly(pc_context(n), p, text)).embed(ring);
}

// P^1 s_k written in the pc-basis and moved into `ring`.
GradedPoly p1_of_power_sum(unsigned k, unsigned n, std::uint32_t p, const ContextPtr& ring) {
    return to_pc_basis(steenrod_p1(power_sum(k, n, p)), n).embed(ring);
}

// Number of normal-form monomials of a given degree in the target of a ring map.
std::size_t surviving_monomials(const QuotientPresentation& q, int degree) {
    const auto& ctx = *q.context();
    std::size_t count = 0;
    Monomial m;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == ctx.size()) {
            if (left == 0 && q.survives(m)) ++count;
            return;
        }
        const int d = ctx.degree(i);
        if (q.is_eliminated(i) || d == 0) {
            rec(i + 1, left);
            return;
        }
        for (int e = 0; e * d <= left && e < 256; ++e) {
            m.e[i] = static_cast<std::uint8_t>(e);
            rec(i + 1, left - e * d);
        }
        m.e[i] = 0;
    };
    rec(0, degree);
    return count;
}

void degree_audit(Report& r, const RestrictionData& data, const std::string& citation) {
    for (const auto& [name, expected] : data.degrees) {
        const auto& img = data.image(name);
        auto d = img.homogeneous_degree();
        r.record("deg i*(" + name + ")", citation, std::to_string(expected), d ? std::to_string(*d) : "inhomogeneous",
                 d && *d == expected);
    }
}

template <class F>
Report timed(const std::string& suite, F body) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.suite = suite;
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

const GradedPoly& RestrictionData::image(const std::string& generator) const {
    for (const auto& [name, img] : images)
        if (name == generator) return img;
    throw IndexError("no restriction image for " + generator);
}

RestrictionData e7_restriction() {
    RestrictionData d;
    d.name = "E7";
    d.spin_arity = 5;
    d.p = kE7Prime;
    d.ring = e7_ring();
    // y10 restricts through x5^2 with x5 -> c5, which fixes the degree at 20.
    const std::vector<std::pair<std::string, std::string>> text{
        {"y2", "p1"},
        {"y6", "-6*p3 + p1*p2"},
        {"y8", "12*p4 + p2^2 - 1/2*p1^2*p2"},
        {"y10", "c5^2"},
        {"y14", "a*p1^2*c5^2 - b*p2*c5^2"},
    };
    for (const auto& [name, expr] : text) d.images.emplace_back(name, parse_poly(d.ring, d.p, expr));
    d.degrees = {{"y2", 4}, {"y6", 12}, {"y8", 16}, {"y10", 20}, {"y14", 28}};
    return d;
}

RestrictionData e8_restriction() {
    RestrictionData d;
    d.name = "E8";
    d.spin_arity = 8;
    d.p = kE8Prime;
    d.ring = pc_context(8);
    const std::vector<std::pair<std::string, std::string>> text{
        {"z2", "p1"},
        {"z8", "120*p4 + 1680*c8 + p1^2*p2 - 36*p1*p3 + 10*p2^2"},
        {"z12", "60*p6 - p1*p2*p3 - 5*p1*p5 + 5/36*p2^3 - 5*p2*p4 + 110*p2*c8 + 3*p3^2"},
        {"z14", "480*p7 - p2^2*p3 + 40*p2*p5 - 12*p3*p4 + 312*p3*c8"},
    };
    for (const auto& [name, expr] : text) d.images.emplace_back(name, parse_poly(d.ring, d.p, expr));
    d.degrees = {{"z2", 4}, {"z8", 16}, {"z12", 24}, {"z14", 28}};
    return d;
}

RingMap e7_pi() {
    return make_map(e7_ring(), {"a2", "a3", "a4", "b5", "a", "b"}, {8, 12, 16, 10, 0, 0}, kE7Prime, {"12*a4 + a2^2"},
                    {{"a2", 3}, {"a3", 2}, {"a4", 2}, {"b5", 3}},
                    {{"p1", "0"}, {"p2", "a2"}, {"p3", "a3"}, {"p4", "a4"}, {"c5", "b5"}, {"a", "a"}, {"b", "b"}});
}

RingMap e7_pi_prime() {
    return make_map(e7_ring(), {"a2'", "a4'", "b5'", "a", "b"}, {8, 16, 10, 0, 0}, kE7Prime, {"12*a4' + a2'^2"},
                    {{"a2'", 3}, {"a4'", 2}, {"b5'", 5}},
                    {{"p1", "0"}, {"p2", "a2'"}, {"p3", "0"}, {"p4", "a4'"}, {"c5", "b5'"}, {"a", "a"}, {"b", "b"}});
}

RingMap e8_pi() {
    return make_map(pc_context(8), {"a3", "a4", "a7", "b8"}, {12, 16, 28, 16}, kE8Prime, {"a3*a4 - 26*a3*b8 - 40*a7"},
                    {{"a3", 2}, {"a4", 2}, {"a7", 2}, {"b8", 4}},
                    {{"p1", "0"},
                     {"p2", "0"},
                     {"p3", "a3"},
                     {"p4", "a4"},
                     {"p5", "0"},
                     {"p6", "0"},
                     {"p7", "a7"},
                     {"c8", "b8"}});
}

RingMap e8_pi_prime() {
    return make_map(pc_context(8), {"a2'", "a4'", "b8'"}, {8, 16, 16}, kE8Prime, {"a4' + 14*b8'"},
                    {{"a2'", 2}, {"a4'", 6}, {"b8'", 6}},
                    {{"p1", "0"},
                     {"p2", "a2'"},
                     {"p3", "0"},
                     {"p4", "a4'"},
                     {"p5", "0"},
                     {"p6", "0"},
                     {"p7", "0"},
                     {"c8", "b8'"}});
}

PhiData e8_phi() {
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (int i = 1; i <= 8; ++i) {
        names.push_back("c" + std::to_string(i));
        degrees.push_back(2 * i);
    }
    const auto ring = make_context(std::move(names), std::move(degrees));
    const std::vector<std::string> h_text{
        "0",
        "0",
        "3/2*c3",
        "-5/2*c5 - 1/2*c2*c3",
        "7/2*c7 + 3/2*c2*c5 - 1/2*c3*c4",
        "-5/2*c2*c7 + 3/2*c3*c6 - 1/2*c4*c5",
        "-5/2*c3*c8 + 3/2*c4*c7 - 1/2*c5*c6",
        "3/2*c5*c8 - 1/2*c6*c7",
    };
    std::vector<GradedPoly> h;
    for (const auto& t : h_text) h.push_back(parse_poly(ring, kE8Prime, t));
    return PhiData{kE8Prime, ring, std::move(h), parse_poly(ring, kE8Prime, "c8 - 1/4*c1*c7")};
}

GradedPoly PhiData::p_in_c(unsigned k) const {
    auto c = [&](unsigned i) {
        if (i == 0) return GradedPoly::constant(c_ring, p, 1);
        if (i > 8) return GradedPoly(c_ring, p);
        return GradedPoly::variable(c_ring, p, i - 1);
    };
    GradedPoly sum(c_ring, p);
    for (unsigned i = 0; i <= 2 * k; ++i) {
        auto term = c(i) * c(2 * k - i);
        sum += i % 2 ? -term : term;
    }
    return k % 2 ? -sum : sum;
}

GradedPoly PhiData::to_c_ring(const GradedPoly& f) const {
    std::vector<GradedPoly> images;
    for (unsigned k = 1; k <= 7; ++k) images.push_back(p_in_c(k));
    images.push_back(GradedPoly::variable(c_ring, p, 7));
    return f.is_zero() ? GradedPoly(c_ring, p) : f.substitute(images);
}

GradedPoly PhiData::apply(const GradedPoly& f) const {
    std::vector<GradedPoly> images;
    const auto c1 = GradedPoly::variable(c_ring, p, 0);
    for (unsigned k = 1; k <= 7; ++k) images.push_back(p_in_c(k) + c1 * h[k]);
    images.push_back(c8_image);
    return f.is_zero() ? GradedPoly(c_ring, p) : f.substitute(images);
}

GradedPoly reduce_mod_c1_c2(const GradedPoly& f, unsigned c1_power, unsigned c2_power) {
    return f.filter([&](const Monomial& m) {
        if (c1_power && m.e[0] >= c1_power) return false;
        if (c2_power && m.e[1] >= c2_power) return false;
        return true;
    });
}

Report verify_e7() {
    return timed("e7", [](Report& r) {
        const auto data = e7_restriction();
        const auto pi = e7_pi();
        const auto pi2 = e7_pi_prime();
        const auto& ring = data.ring;
        const std::uint32_t p = kE7Prime;
        auto img = [&](const std::string& g) { return data.image(g); };
        degree_audit(r, data, "§3.2.1 restriction data");

        const auto zero = GradedPoly(pi.target().context(), p);
        const std::string pi_cite = "§3.2.1 Eq. (pi-E_7)";
        r.compare("pi(i*(y2)) = 0", pi_cite, zero, pi.apply(img("y2")));
        r.compare("pi(i*(y8)) = 0", pi_cite, zero, pi.apply(img("y8")));
        r.compare("pi(i*(y6^2)) = 0", pi_cite, zero, pi.apply(img("y6") * img("y6")));
        r.compare("pi(i*(y14 y10)) = 0", pi_cite, zero, pi.apply(img("y14") * img("y10")));
        r.compare("pi(P1 p1)", "§3.2.1 pi(P^1 p_1) = -15 a_3 a_4 b_5^2", expect(pi, "-15*a3*a4*b5^2"),
                  pi.apply(p1_of("p1", 5, p, ring)));

        const auto zero2 = GradedPoly(pi2.target().context(), p);
        const std::string pi2_cite = "§3.2.1 Eq. (pi'-E_7)";
        r.compare("pi'(i*(y2)) = 0", pi2_cite, zero2, pi2.apply(img("y2")));
        r.compare("pi'(i*(y6)) = 0", pi2_cite, zero2, pi2.apply(img("y6")));
        r.compare("pi'(i*(y8)) = 0", pi2_cite, zero2, pi2.apply(img("y8")));

        r.compare("P1 s1 = 2 s12", "§3.2.1 P^1 s_1 = 2 s_12", p1_power_sum(1, 5, p), steenrod_p1(power_sum(1, 5, p)));
        r.compare("P1 s3 = 6 s14", "§3.2.1 pi'(P^1 s_3) = pi'(6 s_14)", power_sum(14, 5, p).scaled(6),
                  steenrod_p1(power_sum(3, 5, p)));
        r.compare("pi'(P1 p1)", "§3.2.1 pi'(P^1 p_1) = -a_2'(b_5')^4", expect(pi2, "-a2'*b5'^4"),
                  pi2.apply(p1_of("p1", 5, p, ring)));
        r.compare("pi'(P1 s3)", "§3.2.1 pi'(P^1 s_3) = -9 a_4'(b_5')^4", expect(pi2, "-9*a4'*b5'^4"),
                  pi2.apply(p1_of_power_sum(3, 5, p, ring)));
        r.compare("pi'(P1 p3)", "§3.2.1 pi'(P^1 p_3) = 9 a_4'(b_5')^4", expect(pi2, "9*a4'*b5'^4"),
                  pi2.apply(p1_of("p3", 5, p, ring)));
        r.compare("pi'(P1 i*(y6))", "§3.2.1 pi'(P^1(-6p_3 + p_1 p_2)) = -19 a_4'(b_5')^4", expect(pi2, "-19*a4'*b5'^4"),
                  pi2.apply(p1_of("-6*p3 + p1*p2", 5, p, ring)));
    });
}

Report verify_e8_pi() {
    return timed("e8", [](Report& r) {
        const auto data = e8_restriction();
        const auto pi = e8_pi();
        const auto pi2 = e8_pi_prime();
        const auto& ring = data.ring;
        const std::uint32_t p = kE8Prime;
        auto img = [&](const std::string& g) { return data.image(g); };
        degree_audit(r, data, "§3.2.2 z~ representatives");
        r.compare("i*(z2) = p1 = s1", "§3.2.2 Eq. (z_2)", img("z2"), to_pc_basis(power_sum(1, 8, p), 8));

        const auto zero = GradedPoly(pi.target().context(), p);
        const std::string pi_cite = "§3.2.2 pi kill list";
        r.compare("pi(i*(z2)) = 0", pi_cite, zero, pi.apply(img("z2")));
        r.compare("pi(i*(z12)) = 0", pi_cite, zero, pi.apply(img("z12")));
        r.compare("pi(i*(z14)) = 0", pi_cite, zero, pi.apply(img("z14")));
        const auto n36 = surviving_monomials(pi.target(), 36);
        r.record("pi(i*(z18)) = 0 by degree", pi_cite, "0 monomials in degree 36", std::to_string(n36) + " monomials in degree 36",
                 n36 == 0);
        r.compare("P1 s1 = 2 s19", "§3.2.2 pi(P^1 s_1) = pi(2 s_19)", p1_power_sum(1, 8, p), steenrod_p1(power_sum(1, 8, p)));
        r.compare("pi(P1 p1)", "§3.2.2 pi(P^1 p_1) = 2 a_4 a_7 b_8^2", expect(pi, "2*a4*a7*b8^2"),
                  pi.apply(p1_of("p1", 8, p, ring)));

        const auto zero2 = GradedPoly(pi2.target().context(), p);
        const std::string pi2_cite = "§3.2.2 pi' kill list";
        r.compare("pi'(i*(z2)) = 0", pi2_cite, zero2, pi2.apply(img("z2")));
        r.compare("pi'(i*(z8)) = 0", pi2_cite, zero2, pi2.apply(img("z8")));
        r.compare("pi'(i*(z14)) = 0", pi2_cite, zero2, pi2.apply(img("z14")));
        r.compare("pi'(i*(z12^2)) = 0", pi2_cite, zero2, pi2.apply(img("z12") * img("z12")));

        r.compare("P1 s2 = 4 s20", "§3.2.2 pi'(P^1 s_2) = pi'(4 s_20)", p1_power_sum(2, 8, p), steenrod_p1(power_sum(2, 8, p)));
        r.compare("P1 s4 = 8 s22", "§3.2.2 pi'(P^1 s_4) = pi'(8 s_22)", p1_power_sum(4, 8, p), steenrod_p1(power_sum(4, 8, p)));
        r.compare("P1 c8 = s18 c8", "§3.2.2 pi'(P^1 c_8) = pi'(s_18 c_8)", power_sum(18, 8, p) * elementary_class(8, 8, p),
                  steenrod_p1(elementary_class(8, 8, p)));
        r.compare("pi'(P1 s2)", "§3.2.2 pi'(P^1 s_2) = -6(b_8')^5", expect(pi2, "-6*b8'^5"), pi2.apply(p1_of_power_sum(2, 8, p, ring)));
        r.compare("pi'(P1 s4)", "§3.2.2 pi'(P^1 s_4) = 16 a_2'(b_8')^5", expect(pi2, "16*a2'*b8'^5"),
                  pi2.apply(p1_of_power_sum(4, 8, p, ring)));
        const auto pc8 = pi2.apply(p1_of("c8", 8, p, ring));
        r.compare("pi'(P1 c8)", "§3.2.2 pi'(P^1 c_8) = 26 a_2'(b_8')^5", expect(pi2, "26*a2'*b8'^5"), pc8);
        const auto pp2 = pi2.apply(p1_of("p2", 8, p, ring));
        r.compare("pi'(P1 p2)", "§3.2.2 pi'(P^1 p_2) = 3(b_8')^5", expect(pi2, "3*b8'^5"), pp2);
        const auto pp4 = pi2.apply(p1_of("p4", 8, p, ring));
        r.compare("pi'(P1 p4)", "§3.2.2 pi'(P^1 p_4) = -a_2'(b_8')^5", expect(pi2, "-a2'*b8'^5"), pp4);
        const auto& q = pi2.target();
        const auto a2 = GradedPoly::variable(q.context(), p, "a2'");
        const auto chain = q.normal_form(pp4.scaled(120) + pc8.scaled(1680) + q.multiply(a2.scaled(20), pp2));
        r.compare("pi'(i*(P1 z8)) from the displayed sum", "§3.2.2 120 pi'(P^1 p_4) + 1680 pi'(P^1 c_8) + 20 a_2' pi'(P^1 p_2)",
                  expect(pi2, "-3*a2'*b8'^5"), chain);
        r.compare("pi'(i*(P1 z8)) direct", "§3.2.2 pi'(i^*(P^1 z_8)) = -3 a_2'(b_8')^5", expect(pi2, "-3*a2'*b8'^5"),
                  pi2.apply(pc_steenrod_p1(img("z8"))));
    });
}

Report verify_e8_phi() {
    return timed("e8-phi", [](Report& r) {
        const auto phi = e8_phi();
        const auto data = e8_restriction();
        const auto& c = phi.c_ring;
        const std::uint32_t p = phi.p;
        const auto ring = pc_context(8);

        // exact images are consistent with p1 = c1^2 - 2 c2
        {
            auto c1 = GradedPoly::variable(c, p, 0), c2 = GradedPoly::variable(c, p, 1);
            auto p1 = phi.p_in_c(1);
            auto phi_p1 = p1.substitute([&] {
                std::vector<GradedPoly> im;
                for (std::size_t i = 0; i < 8; ++i) im.push_back(GradedPoly::variable(c, p, i));
                im[0] = -c1;
                im[1] = c2;
                return im;
            }());
            r.compare("phi(p1) = p1 from phi(c1) = -c1, phi(c2) = c2", "§3.2.2 phi data", p1, phi_p1);
        }
        r.compare("deg(c1 h_i) = deg(p_i)", "§3.2.2 Eq. (varphi)", GradedPoly::constant(c, p, 0), [&] {
            GradedPoly bad(c, p);
            for (unsigned k = 2; k <= 7; ++k) {
                auto d = (GradedPoly::variable(c, p, 0) * phi.h[k]).homogeneous_degree();
                if (!d || *d != static_cast<int>(4 * k)) bad += GradedPoly::constant(c, p, 1);
            }
            return bad;
        }());

        struct Congruence {
            std::string name;
            std::string citation;
            GradedPoly f;
            unsigned c1, c2;
        };
        const std::vector<Congruence> invariants{
            {"phi(z8~) = z8~ mod (c1^2)", "§3.2.2 Proposition (d_8d_12)", data.image("z8"), 2, 0},
            {"phi(z12~) = z12~ mod (c1^2, c2^2)", "§3.2.2 Proposition (d_8d_12)", data.image("z12"), 2, 2},
            {"phi(z14~) = z14~ mod (c1^2, c2)", "§3.2.2 Proposition (d_14)", data.image("z14"), 2, 1},
        };
        for (const auto& k : invariants) {
            auto diff = reduce_mod_c1_c2(phi.apply(k.f) - phi.to_c_ring(k.f), k.c1, k.c2);
            r.compare(k.name, k.citation, GradedPoly(c, p), diff);
        }

        const std::vector<std::tuple<std::string, std::string, std::string>> products{
            {"p2^2*p3", "6*c1*c3^3*c4 - 12*c1*c3*c4*c6 - 10*c1*c4^2*c5", "phi(p2^2 p3)"},
            {"p2*p5", "3*c1*c3^2*c7 + 3/2*c1*c3*c5^2 - c1*c4^2*c5", "phi(p2 p5)"},
            {"p3*c8", "-1/4*c1*c3^2*c7 - 5/2*c1*c5*c8 + 1/2*c1*c6*c7", "phi(p3 c8)"},
            {"p3*p4",
             "-1/2*c1*c3^3*c4 + 7/2*c1*c3^2*c7 + c1*c3*c4*c6 + 5*c1*c3*c5^2 - 5/2*c1*c4^2*c5 - 5*c1*c5*c8 - 7*c1*c6*c7",
             "phi(p3 p4)"},
        };
        for (const auto& [f_text, delta_text, name] : products) {
            auto f = parse_poly(ring, p, f_text);
            auto diff = reduce_mod_c1_c2(phi.apply(f) - phi.to_c_ring(f), 2, 1);
            r.compare(name + " - " + f_text + " mod (c1^2, c2)", "§3.2.2 displayed congruence for " + f_text,
                      reduce_mod_c1_c2(parse_poly(c, p, delta_text), 2, 1), diff);
        }
    });
}

}  // namespace nilcheck
