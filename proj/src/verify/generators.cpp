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

#include "fdiv/verify/generators.hpp"

#include <algorithm>

#include "fdiv/error.hpp"

namespace frobdiv::gen {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) { return uniform_int(rng, lo, hi); }

FieldElement element(Rng& rng, const Field& k)
{
    return k.element(static_cast<std::uint32_t>(uniform(rng, 0, k.size() - 1)));
}

FieldElement nonzero_element(Rng& rng, const Field& k)
{
    return k.element(static_cast<std::uint32_t>(uniform(rng, 1, k.size() - 1)));
}

LaurentPoly laurent(Rng& rng, const Field& k, std::int64_t lo, std::int64_t hi)
{
    std::vector<std::pair<std::int64_t, FieldElement>> terms;
    for (std::int64_t e = lo; e <= hi; ++e) terms.emplace_back(e, element(rng, k));
    return LaurentPoly::from_terms(k, terms);
}

LaurentPoly polynomial(Rng& rng, const Field& k, std::int64_t max_degree) { return laurent(rng, k, 0, max_degree); }

Matrix matrix(Rng& rng, const Field& k, std::size_t rows, std::size_t cols)
{
    Matrix m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = element(rng, k);
    return m;
}

Matrix invertible_matrix(Rng& rng, const Field& k, std::size_t n)
{
    while (true) {
        Matrix m = matrix(rng, k, n, n);
        if (rank(m) == n) return m;
    }
}

namespace {

bool within(const LaurentMatrix& m, std::int64_t lo, std::int64_t hi)
{
    const auto mn = m.min_exponent();
    const auto mx = m.max_exponent();
    return !mn || (*mn >= lo && *mx <= hi);
}

// row_i += c x^e row_j  (or the analogous column operation)
LaurentMatrix elementary(const LaurentMatrix& m, bool on_rows, std::size_t i, std::size_t j, const LaurentPoly& f)
{
    LaurentMatrix out = m;
    if (on_rows) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) += f * m(j, c);
    } else {
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, i) += m(r, j) * f;
    }
    return out;
}

} // namespace

LaurentMatrix transition_matrix(Rng& rng, const Field& k, std::size_t rank, std::int64_t lo, std::int64_t hi)
{
    const std::int64_t dlo = std::max<std::int64_t>(lo, -2);
    const std::int64_t dhi = std::min<std::int64_t>(hi, 2);
    LaurentMatrix m(k, rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        m(i, i) = LaurentPoly::monomial(k, nonzero_element(rng, k), uniform(rng, dlo, dhi));
    if (rank < 2) return m;
    const int ops = static_cast<int>(uniform(rng, 1, 3 * static_cast<std::int64_t>(rank)));
    for (int done = 0, attempts = 0; done < ops && attempts < 200; ++attempts) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, rank - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, rank - 2));
        if (j >= i) ++j;
        const auto f = LaurentPoly::monomial(k, nonzero_element(rng, k), uniform(rng, lo, hi));
        LaurentMatrix next = elementary(m, uniform(rng, 0, 1) == 0, i, j, f);
        if (within(next, lo, hi)) {
            m = std::move(next);
            ++done;
        }
    }
    return m;
}

LaurentMatrix unimodular_matrix(Rng& rng, const Field& k, std::size_t rank, std::int64_t max_degree)
{
    LaurentMatrix m(k, rank, rank);
    for (std::size_t i = 0; i < rank; ++i) m(i, i) = LaurentPoly::constant(k, nonzero_element(rng, k));
    if (rank < 2) return m;
    const int ops = static_cast<int>(uniform(rng, 1, 2 * static_cast<std::int64_t>(rank)));
    for (int done = 0, attempts = 0; done < ops && attempts < 200; ++attempts) {
        const auto i = static_cast<std::size_t>(uniform(rng, 0, rank - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, rank - 2));
        if (j >= i) ++j;
        const auto f = polynomial(rng, k, uniform(rng, 0, max_degree));
        LaurentMatrix next = elementary(m, uniform(rng, 0, 1) == 0, i, j, f);
        if (within(next, 0, max_degree)) {
            m = std::move(next);
            ++done;
        }
    }
    return m;
}

std::vector<LaurentMatrix> affine_tower(Rng& rng, const Field& k, std::size_t rank, std::size_t length)
{
    std::vector<LaurentMatrix> tower;
    const std::int64_t max_degree = k.characteristic() == 2 ? 2 : 1;
    for (std::size_t i = 0; i < length; ++i) tower.push_back(unimodular_matrix(rng, k, rank, max_degree));
    return tower;
}

LaurentMatrix invert_variable(const LaurentMatrix& m)
{
    return m.map_entries([](const LaurentPoly& f) {
        std::vector<std::pair<std::int64_t, FieldElement>> terms;
        for (const auto& [e, c] : f.terms()) terms.emplace_back(-e, c);
        return LaurentPoly::from_terms(f.field(), terms);
    });
}

FdivTowerP1 periodic_tower(Rng& rng, const Field& k, std::size_t rank, std::size_t period)
{
    std::vector<Matrix> isos;
    for (std::size_t i = 0; i < period; ++i) isos.push_back(invertible_matrix(rng, k, rank));
    Matrix cycle = Matrix::identity(k, rank);
    for (std::size_t i = 0; i < period; ++i) cycle = cycle * isos[i].frobenius(static_cast<std::int64_t>(i));
    Matrix top = Matrix::identity(k, rank);
    if (period % k.degree() == 0)
        for (auto j = uniform(rng, 0, 3); j > 0; --j) top = top * cycle;
    std::vector<Matrix> t(period, top);
    for (std::size_t i = period; i-- > 1;)
        t[i] = isos[i] * t[(i + 1) % period].frobenius(1) * *inverse(isos[i]);
    std::vector<BundleP1> bundles;
    for (const auto& m : t) bundles.emplace_back(LaurentMatrix::from_constant(m));
    return frobdiv::periodic_tower(std::move(bundles), std::move(isos));
}

Matrix matrix_of_rank(Rng& rng, const Field& k, std::size_t rows, std::size_t cols, std::size_t r)
{
    r = std::min({r, rows, cols});
    for (;;) {
        Matrix m = matrix(rng, k, rows, r) * matrix(rng, k, r, cols);
        if (rank(m) == r) return m;
    }
}

TwistedTower twisted_tower(Rng& rng, const Field& k, std::size_t max_dim, std::size_t max_length)
{
    bool periodic = uniform(rng, 0, 1) == 1;
    std::size_t length = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_length)));
    std::vector<std::size_t> dims(length);
    for (auto& d : dims) d = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_dim)));
    std::size_t preamble = periodic ? static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(length) - 1)) : 0;
    std::size_t nmaps = periodic ? length : length - 1;
    std::vector<SemilinearMap> maps;
    for (std::size_t n = 0; n < nmaps; ++n) {
        std::size_t rows = dims[n];
        std::size_t cols = n + 1 < length ? dims[n + 1] : dims[preamble];
        std::size_t full = std::min(rows, cols);
        // Full rank half the time so that nonzero limits are common.
        std::size_t r = uniform(rng, 0, 1) == 1 ? full : static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(full)));
        maps.push_back({matrix_of_rank(rng, k, rows, cols, r), uniform(rng, -2, 2)});
    }
    if (periodic) return TwistedTower::periodic(k, std::move(dims), std::move(maps), preamble);
    return TwistedTower::truncated(k, std::move(dims), std::move(maps));
}

SpectralPage spectral_page(Rng& rng, std::size_t max_m, std::size_t max_n, std::size_t max_entry)
{
    SpectralPage e(static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_m))),
                   static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_n))));
    for (std::size_t s = 0; s <= e.max_s(); ++s) {
        for (std::size_t t = 0; t <= e.max_t(); ++t) {
            e.set(s, t, static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_entry))));
        }
    }
    return e;
}

} // namespace frobdiv::gen
