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

#include "nilcheck/fp.hpp"

#include <string>

namespace nilcheck {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) throw UnsupportedPrime("modulus " + std::to_string(p) + " is not a supported prime");
    // factorial tables below p drive Lucas' theorem; large p only needs them lazily
    if (p_ <= (1u << 20)) {
        fact_.resize(p_);
        inv_fact_.resize(p_);
        fact_[0] = 1 % p_;
        for (std::uint32_t i = 1; i < p_; ++i) fact_[i] = mul(fact_[i - 1], i);
        inv_fact_[p_ - 1] = pow(fact_[p_ - 1], p_ - 2);
        for (std::uint32_t i = p_ - 1; i > 0; --i) inv_fact_[i - 1] = mul(inv_fact_[i], i);
    }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t r = 1 % p_, b = a % p_;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw NotInvertible("0 has no inverse mod " + std::to_string(p_));
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = t - q * new_t;
        std::swap(t, new_t);
        r = r - q * new_r;
        std::swap(r, new_r);
    }
    return reduce(t);
}

std::uint32_t PrimeField::binomial(std::uint64_t n, std::uint64_t k) const {
    if (fact_.empty()) throw Unsupported("binomial coefficients need p < 2^20");
    std::uint32_t r = 1 % p_;
    while (n || k) {
        auto nd = static_cast<std::uint32_t>(n % p_), kd = static_cast<std::uint32_t>(k % p_);
        if (kd > nd) return 0;
        r = mul(r, mul(fact_[nd], mul(inv_fact_[kd], inv_fact_[nd - kd])));
        n /= p_;
        k /= p_;
    }
    return r;
}

std::uint32_t PrimeField::multinomial(const std::uint8_t* parts, std::size_t count) const {
    std::uint32_t r = 1 % p_;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (parts[i] == 0) continue;
        total += parts[i];
        r = mul(r, binomial(total, parts[i]));
        if (r == 0) return 0;
    }
    return r;
}

FpElement::FpElement(std::int64_t v, std::uint32_t p) : modulus(p) {
    auto r = v % static_cast<std::int64_t>(p);
    value = static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

namespace {
void check_same(const FpElement& a, const FpElement& b) {
    if (a.modulus != b.modulus) throw ContextError("field elements from different prime fields");
}
}  // namespace

FpElement operator+(FpElement a, FpElement b) {
    check_same(a, b);
    return FpElement(static_cast<std::int64_t>(a.value) + b.value, a.modulus);
}
FpElement operator-(FpElement a, FpElement b) {
    check_same(a, b);
    return FpElement(static_cast<std::int64_t>(a.value) - b.value, a.modulus);
}
FpElement operator*(FpElement a, FpElement b) {
    check_same(a, b);
    return FpElement(static_cast<std::int64_t>(static_cast<std::uint64_t>(a.value) * b.value % a.modulus), a.modulus);
}
FpElement FpElement::operator-() const { return FpElement(-static_cast<std::int64_t>(value), modulus); }

FpElement fp_inv(FpElement a) {
    if (a.value % a.modulus == 0) throw NotInvertible("0 has no inverse mod " + std::to_string(a.modulus));
    std::int64_t t = 0, new_t = 1, r = a.modulus, new_r = a.value % a.modulus;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = t - q * new_t;
        std::swap(t, new_t);
        r = r - q * new_r;
        std::swap(r, new_r);
    }
    return FpElement(t, a.modulus);
}

}  // namespace nilcheck
