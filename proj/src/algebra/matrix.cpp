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

#include "fdiv/algebra/matrix.hpp"

#include <numeric>

#include "fdiv/error.hpp"

namespace frobdiv {

Matrix Matrix::identity(const Field& k, std::size_t n)
{
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
    return m;
}

Matrix Matrix::from_columns(const Field& k, std::size_t rows, const std::vector<std::vector<FieldElement>>& cols)
{
    Matrix m(k, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw InvalidInput("from_columns: column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<FieldElement> Matrix::column(std::size_t j) const
{
    std::vector<FieldElement> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const noexcept
{
    for (auto x : a_)
        if (x.code != 0) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product: shape mismatch");
    const Field& k = a.k_;
    Matrix out(k, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const FieldElement x = a(i, l);
            if (k.is_zero(x)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = k.add(out(i, j), k.mul(x, b(l, j)));
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.k_.add(a.a_[i], b.a_[i]);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.k_.sub(a.a_[i], b.a_[i]);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const
{
    if (v.size() != cols_) throw InvalidInput("matrix apply: length mismatch");
    std::vector<FieldElement> out(rows_, k_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] = k_.add(out[i], k_.mul((*this)(i, j), v[j]));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix out(k_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::frobenius(std::int64_t n) const
{
    Matrix out = *this;
    for (auto& x : out.a_) x = k_.frobenius(x, n);
    return out;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const
{
    if (first + count > cols_) throw InvalidInput("column_block: out of range");
    Matrix out(k_, rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_) throw InvalidInput("hconcat: row mismatch");
    Matrix out(a.k_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
    }
    return out;
}

RowEchelon row_reduce(Matrix m)
{
    const Field k = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && k.is_zero(m(piv, c))) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const FieldElement inv = k.inv(m(r, c));
        for (std::size_t j = c; j < cols; ++j) m(r, j) = k.mul(m(r, j), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const FieldElement f = m(i, c);
            if (k.is_zero(f)) continue;
            for (std::size_t j = c; j < cols; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

namespace {

// Forward elimination only; returns the rank.
std::size_t eliminate_rank(Matrix& m)
{
    const Field k = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && k.is_zero(m(piv, c))) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const FieldElement inv = k.inv(m(r, c));
        for (std::size_t i = r + 1; i < rows; ++i) {
            const FieldElement f = m(i, c);
            if (k.is_zero(f)) continue;
            const FieldElement s = k.mul(f, inv);
            for (std::size_t j = c; j < cols; ++j) m(i, j) = k.sub(m(i, j), k.mul(s, m(r, j)));
        }
        ++r;
    }
    return r;
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::size_t rank(const Matrix& m)
{
    Matrix copy = m;
    return eliminate_rank(copy);
}

std::size_t block_rank(const Matrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    DisjointSets sets(cols);
    std::vector<std::vector<std::size_t>> row_support(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            if (m(i, j).code != 0) row_support[i].push_back(j);
        for (std::size_t t = 1; t < row_support[i].size(); ++t) sets.unite(row_support[i][0], row_support[i][t]);
    }
    std::vector<std::vector<std::size_t>> comp_cols(cols);
    std::vector<std::vector<std::size_t>> comp_rows(cols);
    for (std::size_t j = 0; j < cols; ++j) comp_cols[sets.find(j)].push_back(j);
    for (std::size_t i = 0; i < rows; ++i)
        if (!row_support[i].empty()) comp_rows[sets.find(row_support[i][0])].push_back(i);

    std::size_t total = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (comp_rows[c].empty()) continue;
        Matrix block(m.field(), comp_rows[c].size(), comp_cols[c].size());
        for (std::size_t i = 0; i < comp_rows[c].size(); ++i)
            for (std::size_t j = 0; j < comp_cols[c].size(); ++j) block(i, j) = m(comp_rows[c][i], comp_cols[c][j]);
        total += eliminate_rank(block);
    }
    return total;
}

Matrix kernel_basis(const Matrix& m)
{
    const Field& k = m.field();
    auto [r, pivots] = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols, k.zero());
        v[free] = k.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(r(i, free));
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(k, cols, basis);
}

Matrix column_space(const Matrix& m)
{
    auto ech = row_reduce(m);
    std::vector<std::vector<FieldElement>> cols;
    for (auto c : ech.pivots) cols.push_back(m.column(c));
    return Matrix::from_columns(m.field(), m.rows(), cols);
}

std::optional<std::vector<FieldElement>> solve(const Matrix& m, const std::vector<FieldElement>& b)
{
    if (b.size() != m.rows()) throw InvalidInput("solve: rhs length mismatch");
    const Field& k = m.field();
    Matrix aug(k, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto [r, pivots] = row_reduce(std::move(aug));
    std::vector<FieldElement> x(m.cols(), k.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols()) return std::nullopt;
        x[pivots[i]] = r(i, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) throw InvalidInput("inverse: matrix not square");
    const std::size_t n = m.rows();
    auto [r, pivots] = row_reduce(Matrix::hconcat(m, Matrix::identity(m.field(), n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
    return out;
}

Matrix intersect_spans(const Matrix& u, const Matrix& w)
{
    if (u.rows() != w.rows()) throw InvalidInput("intersect_spans: ambient mismatch");
    const Field& k = u.field();
    const Matrix ub = column_space(u);
    const Matrix wb = column_space(w);
    // ub a = wb b  <=>  [ub | -wb] (a, b) = 0
    Matrix stacked(k, u.rows(), ub.cols() + wb.cols());
    for (std::size_t i = 0; i < u.rows(); ++i) {
        for (std::size_t j = 0; j < ub.cols(); ++j) stacked(i, j) = ub(i, j);
        for (std::size_t j = 0; j < wb.cols(); ++j) stacked(i, ub.cols() + j) = k.neg(wb(i, j));
    }
    const Matrix ker = kernel_basis(stacked);
    std::vector<std::vector<FieldElement>> vecs;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<FieldElement> a(ub.cols());
        for (std::size_t j = 0; j < ub.cols(); ++j) a[j] = ker(j, c);
        vecs.push_back(ub.apply(a));
    }
    return column_space(Matrix::from_columns(k, u.rows(), vecs));
}

bool span_contains(const Matrix& w, const Matrix& u)
{
    if (u.cols() == 0) return true;
    return rank(Matrix::hconcat(w, u)) == rank(w);
}

bool same_span(const Matrix& u, const Matrix& w)
{
    const std::size_t ru = rank(u);
    return ru == rank(w) && rank(Matrix::hconcat(u, w)) == ru;
}

} // namespace frobdiv
