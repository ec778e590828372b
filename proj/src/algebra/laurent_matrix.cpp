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

#include "fdiv/algebra/laurent_matrix.hpp"

#include <bit>
#include <cstdint>

#include "fdiv/error.hpp"

namespace frobdiv {

LaurentMatrix::LaurentMatrix(const Field& k, std::size_t rows, std::size_t cols)
    : k_(k), rows_(rows), cols_(cols), a_(rows * cols, LaurentPoly(k))
{
}

LaurentMatrix LaurentMatrix::identity(const Field& k, std::size_t n)
{
    LaurentMatrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(k, k.one());
    return m;
}

LaurentMatrix LaurentMatrix::diagonal_monomials(const Field& k, const std::vector<std::int64_t>& exponents)
{
    LaurentMatrix m(k, exponents.size(), exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) m(i, i) = LaurentPoly::x_power(k, exponents[i]);
    return m;
}

LaurentMatrix LaurentMatrix::from_constant(const Matrix& c)
{
    LaurentMatrix m(c.field(), c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = LaurentPoly::constant(c.field(), c(i, j));
    return m;
}

LaurentMatrix LaurentMatrix::from_columns(const Field& k, std::size_t rows, const std::vector<std::vector<LaurentPoly>>& cols)
{
    LaurentMatrix m(k, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InvalidInput("from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<LaurentPoly> LaurentMatrix::column(std::size_t j) const
{
    std::vector<LaurentPoly> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b)
{
    if (a.cols_ != b.rows_) throw InvalidInput("Laurent matrix product: shape mismatch");
    LaurentMatrix out(a.k_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const LaurentPoly& x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(l, j).is_zero()) out(i, j) += x * b(l, j);
        }
    return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("Laurent matrix sum: shape mismatch");
    LaurentMatrix out = a;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
    return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("Laurent matrix difference: shape mismatch");
    LaurentMatrix out = a;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
    return out;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) noexcept
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<LaurentPoly> LaurentMatrix::apply(const std::vector<LaurentPoly>& v) const
{
    if (v.size() != cols_) throw InvalidInput("Laurent matrix apply: length mismatch");
    std::vector<LaurentPoly> out(rows_, LaurentPoly(k_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& f) const
{
    LaurentMatrix out = *this;
    for (auto& x : out.a_) x = x * f;
    return out;
}

LaurentMatrix LaurentMatrix::transpose() const
{
    LaurentMatrix out(k_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

LaurentMatrix LaurentMatrix::map_entries(const std::function<LaurentPoly(const LaurentPoly&)>& fn) const
{
    LaurentMatrix out = *this;
    for (auto& x : out.a_) x = fn(x);
    return out;
}

std::optional<std::int64_t> LaurentMatrix::min_exponent() const
{
    std::optional<std::int64_t> out;
    for (const auto& x : a_)
        if (auto e = x.min_exponent()) out = out ? std::min(*out, *e) : *e;
    return out;
}

std::optional<std::int64_t> LaurentMatrix::max_exponent() const
{
    std::optional<std::int64_t> out;
    for (const auto& x : a_)
        if (auto e = x.max_exponent()) out = out ? std::max(*out, *e) : *e;
    return out;
}

bool LaurentMatrix::is_zero() const
{
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool LaurentMatrix::is_polynomial() const
{
    for (const auto& x : a_)
        if (!x.is_polynomial()) return false;
    return true;
}

bool LaurentMatrix::is_copolynomial() const
{
    for (const auto& x : a_)
        if (!x.is_copolynomial()) return false;
    return true;
}

bool LaurentMatrix::is_constant() const
{
    for (const auto& x : a_)
        if (!x.is_constant()) return false;
    return true;
}

Matrix LaurentMatrix::constant_part() const
{
    Matrix m(k_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!(*this)(i, j).is_constant()) throw InvalidInput("matrix entry is not constant");
            m(i, j) = (*this)(i, j).coeff(0);
        }
    return m;
}

namespace {

// Determinant of the submatrix on the given rows and all column subsets, by subset DP:
// minors[mask] = det(rows[0..|mask|), columns in mask).
LaurentPoly subset_determinant(const LaurentMatrix& m, const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols)
{
    const Field& k = m.field();
    const std::size_t n = rows.size();
    if (n == 0) return LaurentPoly::constant(k, k.one());
    if (n > 20) throw InvalidInput("determinant: matrix too large");
    std::vector<LaurentPoly> minors(std::size_t{1} << n, LaurentPoly(k));
    minors[0] = LaurentPoly::constant(k, k.one());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        LaurentPoly acc(k);
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            // Expansion along the last row; sign from j's position among the chosen columns.
            const std::size_t before = static_cast<std::size_t>(std::popcount(mask & ((1u << j) - 1)));
            const LaurentPoly& entry = m(rows[row], cols[j]);
            const LaurentPoly& minor = minors[mask & ~(1u << j)];
            if (!entry.is_zero() && !minor.is_zero()) {
                const LaurentPoly term = entry * minor;
                if ((row + before) % 2 == 0) acc += term;
                else acc -= term;
            }
        }
        minors[mask] = std::move(acc);
    }
    return minors[(std::size_t{1} << n) - 1];
}

} // namespace

LaurentPoly determinant(const LaurentMatrix& m)
{
    if (m.rows() != m.cols()) throw InvalidInput("determinant: matrix not square");
    std::vector<std::size_t> idx(m.rows());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return subset_determinant(m, idx, idx);
}

LaurentMatrix adjugate(const LaurentMatrix& m)
{
    if (m.rows() != m.cols()) throw InvalidInput("adjugate: matrix not square");
    const std::size_t n = m.rows();
    const Field& k = m.field();
    LaurentMatrix adj(k, n, n);
    if (n == 1) {
        adj(0, 0) = LaurentPoly::constant(k, k.one());
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows;
            std::vector<std::size_t> cols;
            for (std::size_t r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (std::size_t c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            LaurentPoly minor = subset_determinant(m, rows, cols);
            adj(i, j) = (i + j) % 2 == 0 ? minor : -minor;
        }
    return adj;
}

LaurentMatrix laurent_matrix_inverse(const LaurentMatrix& t)
{
    if (t.rows() != t.cols()) throw NotATransitionMatrix("matrix is not square");
    const LaurentPoly det = determinant(t);
    if (!det.is_monomial()) throw NotATransitionMatrix("determinant is not a unit c*x^m");
    const Field& k = t.field();
    const std::int64_t m = *det.min_exponent();
    const LaurentPoly det_inv = LaurentPoly::monomial(k, k.inv(det.coeff(m)), -m);
    return adjugate(t).scaled(det_inv);
}

LaurentMatrix polynomial_matrix_inverse(const LaurentMatrix& t)
{
    if (!t.is_polynomial()) throw NotATransitionMatrix("matrix has negative exponents");
    const LaurentPoly det = determinant(t);
    if (det.is_zero() || !det.is_constant()) throw NotATransitionMatrix("determinant is not a nonzero constant");
    return laurent_matrix_inverse(t);
}

LaurentMatrix substitute_power(const LaurentMatrix& m, std::uint64_t factor, bool frobenius_coeffs)
{
    return m.map_entries([&](const LaurentPoly& f) { return substitute_power(f, factor, frobenius_coeffs); });
}

LaurentMatrix frobenius_pullback(const LaurentMatrix& m, std::uint32_t n)
{
    return m.map_entries([&](const LaurentPoly& f) { return frobenius_pullback(f, n); });
}

LaurentMatrix frobenius_descend(const LaurentMatrix& m, std::uint32_t n)
{
    return m.map_entries([&](const LaurentPoly& f) { return frobenius_descend(f, n); });
}

} // namespace frobdiv
