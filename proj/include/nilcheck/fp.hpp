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
#include <vector>

#include "nilcheck/errors.hpp"

namespace nilcheck {

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in the prime field F_p. Values are canonical representatives in [0, p).
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Throws NotInvertible for a = 0.
    std::uint32_t inv(std::uint32_t a) const;

    /// Signed representative in (-p/2, p/2], for display.
    std::int64_t centered(std::uint32_t a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    /// Binomial coefficient mod p by Lucas' theorem.
    std::uint32_t binomial(std::uint64_t n, std::uint64_t k) const;
    /// Multinomial coefficient (sum parts)! / prod(parts!) mod p, digit-wise.
    std::uint32_t multinomial(const std::uint8_t* parts, std::size_t count) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

  private:
    std::uint32_t p_;
    std::vector<std::uint32_t> fact_;
    std::vector<std::uint32_t> inv_fact_;
};

/// A single element of F_p with its modulus attached.
struct FpElement {
    std::uint32_t value = 0;
    std::uint32_t modulus = 2;

    FpElement() = default;
    FpElement(std::int64_t v, std::uint32_t p);

    friend bool operator==(const FpElement&, const FpElement&) = default;
    friend FpElement operator+(FpElement a, FpElement b);
    friend FpElement operator-(FpElement a, FpElement b);
    friend FpElement operator*(FpElement a, FpElement b);
    FpElement operator-() const;
};

/// Multiplicative inverse; throws NotInvertible when a = 0.
FpElement fp_inv(FpElement a);

}  // namespace nilcheck
