/*
   Copyright 2026 The fdiv Authors

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

#ifndef FDIV_ALGEBRA_LAURENT_MATRIX_HPP
#define FDIV_ALGEBRA_LAURENT_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fdiv/algebra/laurent.hpp"
#include "fdiv/algebra/matrix.hpp"

namespace frobdiv {

/// Matrix with Laurent polynomial entries. Also used for ordinary polynomial matrices,
/// in which case no entry carries a negative exponent.
class LaurentMatrix {
public:
    LaurentMatrix(const Field& k, std::size_t rows, std::size_t cols);

    static LaurentMatrix identity(const Field& k, std::size_t n);
    /// diag(x^{a_1}, ..., x^{a_r}).
    static LaurentMatrix diagonal_monomials(const Field& k, const std::vector<std::int64_t>& exponents);
    static LaurentMatrix from_constant(const Matrix& m);
    static LaurentMatrix from_columns(const Field& k, std::size_t rows, const std::vector<std::vector<LaurentPoly>>& cols);

    const Field& field() const noexcept { return k_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    LaurentPoly& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

    std::vector<LaurentPoly> column(std::size_t j) const;

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) noexcept;

    std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& v) const;
    LaurentMatrix scaled(const LaurentPoly& f) const;
    LaurentMatrix transpose() const;
    LaurentMatrix map_entries(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const;

    /// Exponent range over all entries; nullopt for the zero matrix.
    std::optional<std::int64_t> min_exponent() const;
    std::optional<std::int64_t> max_exponent() const;
    bool is_zero() const;
    bool is_polynomial() const;
    bool is_copolynomial() const;
    bool is_constant() const;
    /// The constant matrix; throws InvalidInput if some entry is not constant.
    Matrix constant_part() const;

private:
    Field k_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<LaurentPoly> a_;
};

LaurentPoly determinant(const LaurentMatrix& m);
LaurentMatrix adjugate(const LaurentMatrix& m);

/// Inverse over the Laurent ring. The determinant must be a unit c x^m; otherwise NotATransitionMatrix.
LaurentMatrix laurent_matrix_inverse(const LaurentMatrix& t);

/// Inverse over k[x]: the determinant must be a nonzero constant and the entries polynomial.
LaurentMatrix polynomial_matrix_inverse(const LaurentMatrix& t);

LaurentMatrix substitute_power(const LaurentMatrix& m, std::uint64_t factor, bool frobenius_coeffs);
LaurentMatrix frobenius_pullback(const LaurentMatrix& m, std::uint32_t n);
LaurentMatrix frobenius_descend(const LaurentMatrix& m, std::uint32_t n);

} // namespace frobdiv

#endif // FDIV_ALGEBRA_LAURENT_MATRIX_HPP
