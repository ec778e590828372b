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

#include "fdiv/algebra/pid.hpp"

#include <algorithm>

#include "fdiv/error.hpp"

namespace frobdiv {

namespace {

bool column_is_zero(const std::vector<LaurentPoly>& col)
{
    return std::all_of(col.begin(), col.end(), [](const LaurentPoly& f) { return f.is_zero(); });
}

void axpy(std::vector<LaurentPoly>& y, const LaurentPoly& a, const std::vector<LaurentPoly>& x)
{
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i] -= a * x[i];
}

LaurentPoly make_monic(const LaurentPoly& f)
{
    const Field& k = f.field();
    return f.scaled(k.inv(f.coeff(*f.max_exponent())));
}

} // namespace

std::vector<std::vector<LaurentPoly>> module_basis(std::size_t rows, std::vector<std::vector<LaurentPoly>> columns)
{
    std::vector<std::vector<LaurentPoly>> basis;
    std::erase_if(columns, column_is_zero);
    for (std::size_t row = 0; row < rows && !columns.empty(); ++row) {
        while (true) {
            std::vector<std::size_t> nz;
            for (std::size_t c = 0; c < columns.size(); ++c)
                if (!columns[c][row].is_zero()) nz.push_back(c);
            if (nz.empty()) break;
            if (nz.size() == 1) {
                basis.push_back(std::move(columns[nz[0]]));
                columns.erase(columns.begin() + static_cast<std::ptrdiff_t>(nz[0]));
                break;
            }
            const std::size_t best = *std::min_element(nz.begin(), nz.end(), [&](std::size_t a, std::size_t b) {
                return *columns[a][row].max_exponent() < *columns[b][row].max_exponent();
            });
            for (const std::size_t c : nz) {
                if (c == best) continue;
                const auto [q, r] = poly_divmod(columns[c][row], columns[best][row]);
                axpy(columns[c], q, columns[best]);
            }
        }
        std::erase_if(columns, column_is_zero);
    }
    return basis;
}

std::vector<LaurentPoly> smith_invariants(LaurentMatrix m)
{
    if (!m.is_polynomial()) throw InvalidInput("smith_invariants: entries must be polynomials");
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<LaurentPoly> factors;
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Move a minimal-degree nonzero entry of the trailing block to (t, t).
            std::size_t bi = rows, bj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (!m(i, j).is_zero() &&
                        (bi == rows || *m(i, j).max_exponent() < *m(bi, bj).max_exponent())) {
                        bi = i;
                        bj = j;
                    }
            if (bi == rows) return factors;
            swap_rows(t, bi);
            swap_cols(t, bj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m(i, t).is_zero()) continue;
                const auto [q, r] = poly_divmod(m(i, t), m(t, t));
                for (std::size_t j = t; j < cols; ++j)
                    if (!m(t, j).is_zero()) m(i, j) -= q * m(t, j);
                dirty = dirty || !r.is_zero();
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m(t, j).is_zero()) continue;
                const auto [q, r] = poly_divmod(m(t, j), m(t, t));
                for (std::size_t i = t; i < rows; ++i)
                    if (!m(i, t).is_zero()) m(i, j) -= q * m(i, t);
                dirty = dirty || !r.is_zero();
            }
            if (dirty) continue;

            // The pivot must divide the whole trailing block; otherwise fold the offending row in.
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!m(i, j).is_zero() && !poly_divmod(m(i, j), m(t, t)).second.is_zero()) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == rows) break;
            for (std::size_t j = t; j < cols; ++j) m(t, j) += m(bad_row, j);
        }
        factors.push_back(make_monic(m(t, t)));
    }
    return factors;
}

} // namespace frobdiv
