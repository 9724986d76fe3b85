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

#include "nilcheck/poly.hpp"

#include <cctype>
#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "nilcheck/kernels.hpp"

namespace nilcheck {

VarContext::VarContext(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size()) throw ContextError("names and degrees differ in length");
    if (names_.size() > kMaxVars) throw ContextError("at most " + std::to_string(kMaxVars) + " variables supported");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!seen.insert(names_[i]).second) throw ContextError("duplicate variable name " + names_[i]);
        if (degrees_[i] < 0 || degrees_[i] % 2 != 0)
            throw ContextError("variable " + names_[i] + " needs a nonnegative even degree");
    }
}

std::optional<std::size_t> VarContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t VarContext::require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw ContextError("no variable named " + name);
    return *i;
}

bool VarContext::all_degree(int d) const noexcept {
    return std::all_of(degrees_.begin(), degrees_.end(), [d](int x) { return x == d; });
}

ContextPtr make_context(std::vector<std::string> names, std::vector<int> degrees) {
    return std::make_shared<const VarContext>(std::move(names), std::move(degrees));
}

ContextPtr t_context(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, ContextPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
        slot = make_context(std::move(names), std::vector<int>(n, 2));
    }
    return slot;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

unsigned Monomial::total() const noexcept {
    unsigned s = 0;
    for (auto x : e) s += x;
    return s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::uint64_t lo, hi;
    std::memcpy(&lo, m.e.data(), 8);
    std::memcpy(&hi, m.e.data() + 8, 8);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
    h ^= (hi + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    return static_cast<std::size_t>(h ^ (h >> 29));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(a.e[i]) + b.e[i];
        if (s > 255) throw ContextError("exponent overflow (> 255)");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

int cohomological_degree(const VarContext& ctx, const Monomial& m) noexcept {
    int d = 0;
    for (std::size_t i = 0; i < ctx.size(); ++i) d += ctx.degrees()[i] * m.e[i];
    return d;
}

bool graded_lex_greater(const VarContext& ctx, const Monomial& a, const Monomial& b) noexcept {
    int da = cohomological_degree(ctx, a), db = cohomological_degree(ctx, b);
    if (da != db) return da > db;
    return std::memcmp(a.e.data(), b.e.data(), kMaxVars) > 0;
}

GradedPoly::GradedPoly(ContextPtr ctx, std::uint32_t p) : ctx_(std::move(ctx)), p_(p) {
    if (!ctx_) throw ContextError("null context");
    if (!is_prime(p_)) throw UnsupportedPrime(std::to_string(p_) + " is not prime");
}

GradedPoly GradedPoly::constant(ContextPtr ctx, std::uint32_t p, std::int64_t c) {
    return monomial(std::move(ctx), p, Monomial{}, c);
}

GradedPoly GradedPoly::variable(ContextPtr ctx, std::uint32_t p, std::size_t index) {
    if (index >= ctx->size()) throw IndexError("variable index out of range");
    Monomial m;
    m.e[index] = 1;
    return monomial(std::move(ctx), p, m, 1);
}

GradedPoly GradedPoly::variable(ContextPtr ctx, std::uint32_t p, const std::string& name) {
    auto i = ctx->require(name);
    return variable(std::move(ctx), p, i);
}

GradedPoly GradedPoly::monomial(ContextPtr ctx, std::uint32_t p, const Monomial& m, std::int64_t c) {
    GradedPoly r(std::move(ctx), p);
    for (std::size_t i = r.ctx_->size(); i < kMaxVars; ++i)
        if (m.e[i]) throw ContextError("monomial uses variables outside its context");
    FpElement v(c, p);
    if (v.value) r.terms_.push_back({m, v.value});
    return r;
}

GradedPoly GradedPoly::from_terms(ContextPtr ctx, std::uint32_t p, std::vector<Term> terms) {
    GradedPoly r(std::move(ctx), p);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
        for (std::size_t i = r.ctx_->size(); i < kMaxVars; ++i)
            if (t.mono.e[i]) throw ContextError("monomial uses variables outside its context");
        auto& slot = acc[t.mono];
        slot = static_cast<std::uint32_t>((std::uint64_t(slot) + t.coeff % p) % p);
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c) r.terms_.push_back({m, c});
    r.sort_terms();
    return r;
}

void GradedPoly::sort_terms() {
    const auto& ctx = *ctx_;
    std::vector<std::pair<int, Term>> keyed;
    keyed.reserve(terms_.size());
    for (auto& t : terms_) keyed.emplace_back(cohomological_degree(ctx, t.mono), t);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return std::memcmp(x.second.mono.e.data(), y.second.mono.e.data(), kMaxVars) > 0;
    });
    for (std::size_t i = 0; i < keyed.size(); ++i) terms_[i] = keyed[i].second;
}

void GradedPoly::check_compatible(const GradedPoly& o) const {
    if (!same_context(ctx_, o.ctx_)) throw ContextError("polynomials live in different contexts");
    if (p_ != o.p_) throw ContextError("polynomials live over different primes");
}

std::uint32_t GradedPoly::coefficient(const Monomial& m) const noexcept {
    const auto& ctx = *ctx_;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [&](const Term& t, const Monomial& x) { return graded_lex_greater(ctx, t.mono, x); });
    return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

std::optional<int> GradedPoly::homogeneous_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    // sorted by degree first, so comparing the ends suffices
    int hi = cohomological_degree(*ctx_, terms_.front().mono);
    int lo = cohomological_degree(*ctx_, terms_.back().mono);
    if (hi != lo) return std::nullopt;
    return hi;
}

int GradedPoly::max_degree() const noexcept {
    return terms_.empty() ? -1 : cohomological_degree(*ctx_, terms_.front().mono);
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r = *this;
    for (auto& t : r.terms_) t.coeff = p_ - t.coeff;
    return r;
}

GradedPoly merge(const GradedPoly& a, const GradedPoly& b, bool negate) {
    a.check_compatible(b);
    const auto& ctx = *a.ctx_;
    const std::uint32_t p = a.p_;
    GradedPoly r(a.ctx_, p);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    auto bc = [&](std::uint32_t c) { return negate ? (p - c) % p : c; };
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && graded_lex_greater(ctx, a.terms_[i].mono, b.terms_[j].mono))) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || graded_lex_greater(ctx, b.terms_[j].mono, a.terms_[i].mono)) {
            r.terms_.push_back({b.terms_[j].mono, bc(b.terms_[j].coeff)});
            ++j;
        } else {
            std::uint32_t c = (a.terms_[i].coeff + bc(b.terms_[j].coeff)) % p;
            if (c) r.terms_.push_back({a.terms_[i].mono, c});
            ++i;
            ++j;
        }
    }
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) { return *this = merge(*this, o, false); }
GradedPoly& GradedPoly::operator-=(const GradedPoly& o) { return *this = merge(*this, o, true); }
GradedPoly& GradedPoly::operator*=(const GradedPoly& o) { return *this = *this * o; }

GradedPoly multiply_sparse(const GradedPoly& a, const GradedPoly& b) {
    if (!same_context(a.context(), b.context()) || a.prime() != b.prime())
        throw ContextError("polynomials live in different rings");
    const std::uint32_t p = a.prime();
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    acc.reserve(a.size() * b.size() / 2 + 1);
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            auto& slot = acc[x.mono * y.mono];
            slot = static_cast<std::uint32_t>((slot + std::uint64_t(x.coeff) * y.coeff) % p);
        }
    std::vector<GradedPoly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c) terms.push_back({m, c});
    return GradedPoly::from_terms(a.context(), p, std::move(terms));
}

namespace {

bool total_degree_homogeneous(const GradedPoly& f, unsigned& deg) {
    if (f.is_zero()) return false;
    deg = f.terms().front().mono.total();
    for (const auto& t : f.terms())
        if (t.mono.total() != deg) return false;
    return true;
}

}  // namespace

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    if (!same_context(a.context(), b.context()) || a.prime() != b.prime())
        throw ContextError("polynomials live in different rings");
    if (a.is_zero() || b.is_zero()) return GradedPoly(a.context(), a.prime());
    // large products of forms in a uniformly graded ring go through the dense kernel
    unsigned da = 0, db = 0;
    const double work = double(a.size()) * double(b.size());
    if (work > 50000 && a.context()->size() > 0 && a.context()->all_degree(a.context()->degree(0)) &&
        total_degree_homogeneous(a, da) && total_degree_homogeneous(b, db)) {
        auto idx = kernels::homogeneous_index(a.context()->size(), da + db);
        if (double(idx->size()) < 8.0 * work && idx->size() < 4'000'000) {
            auto prod = kernels::dense_mul_parallel(kernels::to_dense(a), kernels::to_dense(b), a.prime());
            return kernels::from_dense(prod, a.context(), a.prime());
        }
    }
    return multiply_sparse(a, b);
}

GradedPoly GradedPoly::scaled(std::int64_t c) const { return scaled_raw(FpElement(c, p_).value); }

GradedPoly GradedPoly::scaled_raw(std::uint32_t c) const {
    GradedPoly r(ctx_, p_);
    c %= p_;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, static_cast<std::uint32_t>(std::uint64_t(t.coeff) * c % p_)});
    return r;
}

GradedPoly GradedPoly::pow(unsigned e) const {
    GradedPoly result = constant(ctx_, p_, 1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

GradedPoly GradedPoly::homogeneous_part(int d) const {
    const auto& ctx = *ctx_;
    return filter([&](const Monomial& m) { return cohomological_degree(ctx, m) == d; });
}

GradedPoly GradedPoly::filter(const std::function<bool(const Monomial&)>& keep) const {
    GradedPoly r(ctx_, p_);
    for (const auto& t : terms_)
        if (keep(t.mono)) r.terms_.push_back(t);
    return r;
}

GradedPoly GradedPoly::embed(const ContextPtr& target) const {
    if (same_context(ctx_, target)) {
        GradedPoly r = *this;
        r.ctx_ = target;
        return r;
    }
    std::vector<std::size_t> where(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        where[i] = target->require(ctx_->name(i));
        if (target->degree(where[i]) != ctx_->degree(i))
            throw ContextError("variable " + ctx_->name(i) + " changes degree on embedding");
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m;
        for (std::size_t i = 0; i < ctx_->size(); ++i) m.e[where[i]] = t.mono.e[i];
        terms.push_back({m, t.coeff});
    }
    return from_terms(target, p_, std::move(terms));
}

GradedPoly GradedPoly::substitute(const std::vector<GradedPoly>& images) const {
    if (images.size() != ctx_->size()) throw IncompleteMap("substitution needs one image per variable");
    const auto& target = images.front().context();
    const std::uint32_t p = images.front().prime();
    // cache powers of each image
    std::vector<std::vector<GradedPoly>> powers(images.size());
    GradedPoly result(target, p);
    for (const auto& t : terms_) {
        GradedPoly term = constant(target, p, t.coeff);
        for (std::size_t i = 0; i < ctx_->size(); ++i) {
            unsigned e = t.mono.e[i];
            if (!e) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, p, 1));
            while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
            term = term * pw[e];
        }
        result += term;
    }
    return result;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return same_context(a.ctx_, b.ctx_) && a.p_ == b.p_ && a.terms_ == b.terms_;
}

std::string GradedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    PrimeField f(p_);
    bool first = true;
    for (const auto& t : terms_) {
        std::int64_t c = f.centered(t.coeff);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        std::int64_t mag = c < 0 ? -c : c;
        bool one = t.mono.is_one();
        if (mag != 1 || one) os << mag;
        bool need_star = mag != 1;
        for (std::size_t i = 0; i < ctx_->size(); ++i) {
            if (!t.mono.e[i]) continue;
            if (need_star) os << "*";
            os << ctx_->name(i);
            if (t.mono.e[i] > 1) os << "^" << int(t.mono.e[i]);
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace nilcheck

namespace nilcheck {

namespace {

class PolyParser {
  public:
    PolyParser(const ContextPtr& ctx, std::uint32_t p, const std::string& text) : ctx_(ctx), p_(p), s_(text) {}

    GradedPoly parse() {
        auto r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

  private:
    const ContextPtr& ctx_;
    std::uint32_t p_;
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ContextError("cannot parse polynomial '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::uint64_t number() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
            if (v > (1ull << 40)) fail("number too large");
        }
        return v;
    }
    GradedPoly expr() {
        bool negate = eat('-');
        if (!negate) eat('+');
        GradedPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    GradedPoly term() {
        GradedPoly acc = power();
        for (;;) {
            if (eat('*')) {
                acc = acc * power();
            } else if (eat('/')) {
                auto d = number() % p_;
                if (d == 0) fail("division by a multiple of p");
                acc = acc.scaled_raw(PrimeField(p_).inv(static_cast<std::uint32_t>(d)));
            } else {
                return acc;
            }
        }
    }
    GradedPoly power() {
        GradedPoly base = atom();
        if (eat('^')) base = base.pow(static_cast<unsigned>(number()));
        return base;
    }
    GradedPoly atom() {
        skip();
        if (eat('(')) {
            auto r = expr();
            if (!eat(')')) fail("missing ')'");
            return r;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return GradedPoly::constant(ctx_, p_, static_cast<std::int64_t>(number() % p_));
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
            ++pos_;
        if (start == pos_) fail("expected a term");
        auto name = s_.substr(start, pos_ - start);
        if (!ctx_->index_of(name)) fail("unknown variable " + name);
        return GradedPoly::variable(ctx_, p_, name);
    }
};

}  // namespace

GradedPoly parse_poly(const ContextPtr& ctx, std::uint32_t p, const std::string& text) {
    return PolyParser(ctx, p, text).parse();
}

}  // namespace nilcheck
