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

#include "nilcheck/matrix.hpp"

#include <sstream>

#include "nilcheck/errors.hpp"

namespace nilcheck {

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
    return m;
}

Matrix Matrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    Matrix m(rows.size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw ContextError("matrix rows must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = FpElement(rows[i][j], p).value;
    }
    return m;
}

bool Matrix::is_identity() const noexcept {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n != y.n || x.p != y.p) throw ContextError("matrix shapes or primes differ");
    Matrix r(x.n, x.p);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            std::uint64_t a = x(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < x.n; ++j) r(i, j) = static_cast<std::uint32_t>((r(i, j) + a * y(k, j)) % x.p);
        }
    return r;
}

Matrix inverse(const Matrix& m) {
    PrimeField f(m.p);
    const std::size_t n = m.n;
    Matrix a = m, inv = Matrix::identity(n, m.p);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw NotInvertible("singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(col, j), a(piv, j));
            std::swap(inv(col, j), inv(piv, j));
        }
        std::uint32_t s = f.inv(a(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = f.mul(a(col, j), s);
            inv(col, j) = f.mul(inv(col, j), s);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            std::uint32_t k = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = f.sub(a(i, j), f.mul(k, a(col, j)));
                inv(i, j) = f.sub(inv(i, j), f.mul(k, inv(col, j)));
            }
        }
    }
    return inv;
}

std::size_t MatrixHash::operator()(const Matrix& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m.a) h = (h ^ v) * 1099511628211ull;
    return static_cast<std::size_t>(h);
}

}  // namespace nilcheck
