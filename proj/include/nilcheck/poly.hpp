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

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilcheck/errors.hpp"
#include "nilcheck/fp.hpp"

namespace nilcheck {

inline constexpr std::size_t kMaxVars = 16;

/// Ordered variable names with their cohomological degrees.
///
/// Polynomial variables of the t-ring have degree 2; a generator of half-degree d has degree 2d.
/// Degree-0 variables are admitted for formal parameters.
class VarContext {
  public:
    VarContext(std::vector<std::string> names, std::vector<int> degrees);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    int degree(std::size_t i) const { return degrees_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    std::size_t require(const std::string& name) const;
    bool all_degree(int d) const noexcept;

    friend bool operator==(const VarContext&, const VarContext&) = default;

  private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names, std::vector<int> degrees);
/// t1, ..., tn, each of cohomological degree 2.
ContextPtr t_context(std::size_t n);
bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept;

/// Exponent vector; entries past the context arity stay zero.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    std::uint8_t operator[](std::size_t i) const noexcept { return e[i]; }
    std::uint8_t& operator[](std::size_t i) noexcept { return e[i]; }
    unsigned total() const noexcept;
    bool is_one() const noexcept { return total() == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Product of monomials; throws ContextError on exponent overflow (> 255).
Monomial operator*(const Monomial& a, const Monomial& b);
/// Weighted (cohomological) degree of a monomial.
int cohomological_degree(const VarContext& ctx, const Monomial& m) noexcept;
/// Graded lexicographic comparison: true when a is strictly greater than b.
bool graded_lex_greater(const VarContext& ctx, const Monomial& a, const Monomial& b) noexcept;

/// Exact sparse multivariate polynomial over F_p, terms sorted graded-lex descending.
class GradedPoly {
  public:
    struct Term {
        Monomial mono;
        std::uint32_t coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    GradedPoly(ContextPtr ctx, std::uint32_t p);

    static GradedPoly constant(ContextPtr ctx, std::uint32_t p, std::int64_t c);
    static GradedPoly variable(ContextPtr ctx, std::uint32_t p, std::size_t index);
    static GradedPoly variable(ContextPtr ctx, std::uint32_t p, const std::string& name);
    static GradedPoly monomial(ContextPtr ctx, std::uint32_t p, const Monomial& m, std::int64_t c = 1);
    /// Combines duplicate monomials, reduces coefficients and drops zeros.
    static GradedPoly from_terms(ContextPtr ctx, std::uint32_t p, std::vector<Term> terms);

    const ContextPtr& context() const noexcept { return ctx_; }
    std::uint32_t prime() const noexcept { return p_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    std::uint32_t coefficient(const Monomial& m) const noexcept;
    /// Cohomological degree when homogeneous (zero polynomial: nullopt).
    std::optional<int> homogeneous_degree() const noexcept;
    bool is_homogeneous() const noexcept { return is_zero() || homogeneous_degree().has_value(); }
    /// Largest cohomological degree of a term; -1 for zero.
    int max_degree() const noexcept;
    const Term& leading() const { return terms_.front(); }

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly& operator*=(const GradedPoly& o);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    GradedPoly scaled(std::int64_t c) const;
    GradedPoly scaled_raw(std::uint32_t c) const;
    GradedPoly pow(unsigned e) const;

    /// Terms whose cohomological degree equals d.
    GradedPoly homogeneous_part(int d) const;
    /// Keeps terms for which keep(mono) holds.
    GradedPoly filter(const std::function<bool(const Monomial&)>& keep) const;
    /// Re-expresses the polynomial in another context by matching variable names.
    GradedPoly embed(const ContextPtr& target) const;
    /// Substitutes images[i] for variable i; all images share one target context and prime.
    GradedPoly substitute(const std::vector<GradedPoly>& images) const;

    friend bool operator==(const GradedPoly& a, const GradedPoly& b);

    std::string to_string() const;

  private:
    ContextPtr ctx_;
    std::uint32_t p_;
    std::vector<Term> terms_;

    void check_compatible(const GradedPoly& o) const;
    void sort_terms();
    friend GradedPoly merge(const GradedPoly& a, const GradedPoly& b, bool negate);
};

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

/// Parses text such as "120*p4 + 1680*c8 - 5/36*p2^3 + (t1 + t2)^2" over the given context.
/// Division is allowed by integer literals only. Throws ContextError on malformed input or unknown names.
GradedPoly parse_poly(const ContextPtr& ctx, std::uint32_t p, const std::string& text);

/// Multiplication through a hash accumulator; kept as the reference path for the dense kernels.
GradedPoly multiply_sparse(const GradedPoly& a, const GradedPoly& b);

}  // namespace nilcheck
