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

#include "nilcheck/fp.hpp"

namespace nilcheck {

/// Square matrix over F_p, row-major.
struct Matrix {
    std::size_t n = 0;
    std::uint32_t p = 2;
    std::vector<std::uint32_t> a;

    Matrix() = default;
    Matrix(std::size_t n, std::uint32_t p) : n(n), p(p), a(n * n, 0) {}

    static Matrix identity(std::size_t n, std::uint32_t p);
    /// Entries given as signed integers, reduced mod p.
    static Matrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

    std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return a[i * n + j]; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) noexcept { return a[i * n + j]; }

    bool is_identity() const noexcept;
    friend bool operator==(const Matrix&, const Matrix&) = default;
    std::string to_string() const;
};

Matrix operator*(const Matrix& x, const Matrix& y);
/// Throws NotInvertible for singular input.
Matrix inverse(const Matrix& m);

struct MatrixHash {
    std::size_t operator()(const Matrix& m) const noexcept;
};

}  // namespace nilcheck
