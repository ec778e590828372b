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

#ifndef FDIV_ALGEBRA_MATRIX_HPP
#define FDIV_ALGEBRA_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fdiv/algebra/field.hpp"

namespace frobdiv {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field k, std::size_t rows, std::size_t cols)
        : k_(std::move(k)), rows_(rows), cols_(cols), a_(rows * cols, FieldElement{0})
    {
    }

    static Matrix identity(const Field& k, std::size_t n);
    /// Columns given as vectors of equal length `rows`.
    static Matrix from_columns(const Field& k, std::size_t rows, const std::vector<std::vector<FieldElement>>& cols);

    const Field& field() const noexcept { return k_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
    FieldElement operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

    std::vector<FieldElement> column(std::size_t j) const;
    bool is_zero() const noexcept;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
    Matrix transpose() const;
    /// Entrywise Frobenius^n.
    Matrix frobenius(std::int64_t n) const;
    /// Columns [first, first + count).
    Matrix column_block(std::size_t first, std::size_t count) const;
    /// Concatenate columns of a and b (same row count).
    static Matrix hconcat(const Matrix& a, const Matrix& b);

private:
    Field k_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> a_;
};

/// Reduced row echelon form with the list of pivot columns.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Rank computed blockwise over the connected components of the row/column incidence graph.
/// Same answer as rank(); much faster on the block-diagonal systems produced by Frobenius pullbacks.
std::size_t block_rank(const Matrix& m);
/// Basis of the null space {v : m v = 0}, as the columns of the result.
Matrix kernel_basis(const Matrix& m);
/// A basis of the column space, chosen among the columns of m (pivot columns).
Matrix column_space(const Matrix& m);
/// Some solution of m v = b, if any.
std::optional<std::vector<FieldElement>> solve(const Matrix& m, const std::vector<FieldElement>& b);
/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Intersection of the column spans of u and w (same ambient dimension), as a basis.
Matrix intersect_spans(const Matrix& u, const Matrix& w);
/// True when every column of u lies in the span of the columns of w.
bool span_contains(const Matrix& w, const Matrix& u);
/// True when the column spans of u and w coincide.
bool same_span(const Matrix& u, const Matrix& w);

} // namespace frobdiv

#endif // FDIV_ALGEBRA_MATRIX_HPP
