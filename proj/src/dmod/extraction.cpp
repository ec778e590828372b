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

#include "fdiv/dmod/extraction.hpp"

#include <string>

#include "fdiv/algebra/binomial.hpp"
#include "fdiv/algebra/pid.hpp"
#include "fdiv/error.hpp"

namespace frobdiv {

namespace {

std::int64_t power(std::uint32_t p, std::uint32_t n)
{
    std::int64_t out = 1;
    for (std::uint32_t i = 0; i < n; ++i) out *= p;
    return out;
}

Section column_to_section(const Matrix& basis, std::size_t col, std::size_t rank, std::int64_t degree)
{
    const Field& k = basis.field();
    Section s;
    const auto width = static_cast<std::size_t>(degree + 1);
    for (std::size_t c = 0; c < rank; ++c) {
        std::vector<std::pair<std::int64_t, FieldElement>> terms;
        for (std::size_t i = 0; i < width; ++i) {
            const FieldElement v = basis(c * width + i, col);
            if (!k.is_zero(v)) terms.emplace_back(static_cast<std::int64_t>(i), v);
        }
        s.push_back(LaurentPoly::from_terms(k, terms));
    }
    return s;
}

} // namespace

bool ExtractedLevel::certified() const
{
    if (!spans_module || smith_invariants.size() != generators.cols()) return false;
    for (const auto& f : smith_invariants)
        if (!f.is_constant() || f.is_zero()) return false;
    return true;
}

Matrix slice_kernel(const ActionTable& table, std::uint32_t n, std::int64_t degree)
{
    const DModulePresentation& m = table.presentation();
    const Field& k = m.field;
    const std::size_t r = m.rank;
    const auto width = static_cast<std::size_t>(degree + 1);
    const std::size_t dim = r * width;
    Matrix basis = Matrix::identity(k, dim);
    for (std::uint32_t g = 0; g < n && basis.cols() > 0; ++g) {
        std::vector<Section> images;
        std::int64_t top = 0;
        images.reserve(dim);
        for (std::size_t c = 0; c < r; ++c)
            for (std::size_t i = 0; i < width; ++i) {
                images.push_back(
                    table.apply_generator(g, monomial_section(k, r, c, static_cast<std::int64_t>(i))));
                for (const auto& f : images.back())
                    if (!f.is_zero()) top = std::max(top, *f.max_exponent());
            }
        const auto out_width = static_cast<std::size_t>(top + 1);
        Matrix op(k, r * out_width, dim);
        for (std::size_t col = 0; col < dim; ++col)
            for (std::size_t c = 0; c < r; ++c)
                for (const auto& [e, v] : images[col][c].terms()) op(c * out_width + static_cast<std::size_t>(e), col) = v;
        basis = basis * kernel_basis(op * basis);
    }
    return basis;
}

std::vector<LaurentPoly> to_twisted_coordinates(const Section& s, std::uint32_t n)
{
    if (s.empty()) return {};
    const Field& k = s.front().field();
    const std::int64_t q = power(k.characteristic(), n);
    std::vector<std::vector<std::pair<std::int64_t, FieldElement>>> terms(s.size() * static_cast<std::size_t>(q));
    for (std::size_t c = 0; c < s.size(); ++c) {
        if (!s[c].is_polynomial()) throw InvalidInput("sections must be polynomial");
        for (const auto& [e, v] : s[c].terms())
            terms[c * static_cast<std::size_t>(q) + static_cast<std::size_t>(e % q)].emplace_back(e / q, v);
    }
    std::vector<LaurentPoly> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back(LaurentPoly::from_terms(k, t));
    return out;
}

Section from_twisted_coordinates(const std::vector<LaurentPoly>& v, std::size_t rank, std::uint32_t n)
{
    if (v.empty()) return {};
    const Field& k = v.front().field();
    const std::int64_t q = power(k.characteristic(), n);
    if (v.size() != rank * static_cast<std::size_t>(q)) throw InvalidInput("twisted coordinate vector has the wrong length");
    Section s(rank, LaurentPoly(k));
    for (std::size_t c = 0; c < rank; ++c)
        for (std::int64_t rho = 0; rho < q; ++rho)
            s[c] += substitute_power(v[c * static_cast<std::size_t>(q) + static_cast<std::size_t>(rho)],
                                     static_cast<std::uint64_t>(q), false)
                        .shifted(rho);
    return s;
}

ExtractedLevel extract_level(const DModulePresentation& m, std::uint32_t n, std::int64_t degree_bound,
                             std::int64_t degree_cap)
{
    if (n > m.levels)
        throw InvalidInput("level " + std::to_string(n) + " exceeds the level bound " + std::to_string(m.levels));
    if (degree_bound < 1) throw InvalidInput("degree bound must be at least 1");
    const ActionTable table(m);
    const Field& k = m.field;
    const std::size_t r = m.rank;
    const auto rows = r * static_cast<std::size_t>(power(k.characteristic(), n));

    std::vector<std::pair<std::int64_t, std::size_t>> history;
    std::optional<ExtractedLevel> candidate;
    for (std::int64_t d = degree_bound; d <= degree_cap; d *= 2) {
        const Matrix kernel = slice_kernel(table, n, d);
        std::vector<std::vector<LaurentPoly>> columns;
        for (std::size_t j = 0; j < kernel.cols(); ++j)
            columns.push_back(to_twisted_coordinates(column_to_section(kernel, j, r, d), n));
        const auto basis = module_basis(rows, std::move(columns));
        history.emplace_back(d, basis.size());
        if (basis.size() > r)
            throw ExtractionDiverged("level " + std::to_string(n) + " has rank " + std::to_string(basis.size()) +
                                     " > " + std::to_string(r) + " in degree " + std::to_string(d));
        if (basis.size() < r) {
            candidate.reset();
            continue;
        }
        const auto invariants = smith_invariants(LaurentMatrix::from_columns(k, rows, basis));
        bool saturated = invariants.size() == r;
        for (const auto& f : invariants) saturated = saturated && f.is_constant();
        if (!saturated) {
            candidate.reset();
            continue;
        }
        if (candidate) {
            candidate->rank_history = history;
            return *candidate;
        }
        std::vector<std::vector<LaurentPoly>> gens;
        for (const auto& b : basis) gens.push_back(from_twisted_coordinates(b, r, n));
        ExtractedLevel level{n, LaurentMatrix::from_columns(k, r, gens), invariants, false, d, {}};
        const LaurentPoly det = determinant(level.generators);
        level.spans_module = !det.is_zero() && det.is_constant();
        candidate = std::move(level);
    }
    std::string trail;
    for (const auto& [d, rk] : history) trail += " d=" + std::to_string(d) + ":rank " + std::to_string(rk);
    throw ExtractionDiverged("level " + std::to_string(n) + " did not stabilize at rank " + std::to_string(r) +
                             " below degree " + std::to_string(degree_cap) + ";" + trail);
}

LaurentMatrix verify_fdiv_iso(const DModulePresentation& m, const ExtractedLevel& upper, const ExtractedLevel& lower)
{
    if (upper.n != lower.n + 1) throw InvalidInput("verify_fdiv_iso needs consecutive levels n + 1 and n");
    if (upper.generators.rows() != m.rank || lower.generators.rows() != m.rank)
        throw InvalidInput("extracted levels do not match the presentation rank");
    LaurentMatrix lower_inv(m.field, m.rank, m.rank);
    try {
        lower_inv = polynomial_matrix_inverse(lower.generators);
    } catch (const NotATransitionMatrix& e) {
        throw IsoFailed("generators of level " + std::to_string(lower.n) + " are not a basis: " + e.what());
    }
    const LaurentMatrix change = lower_inv * upper.generators;
    LaurentMatrix c(m.field, m.rank, m.rank);
    try {
        c = frobenius_descend(change, lower.n);
    } catch (const InvalidInput&) {
        throw IsoFailed("change of basis from level " + std::to_string(lower.n + 1) + " to level " +
                        std::to_string(lower.n) + " has entries outside k[x^{p^" + std::to_string(lower.n) + "}]");
    }
    const LaurentPoly det = determinant(c);
    if (det.is_zero() || !det.is_constant())
        throw IsoFailed("change of basis has determinant " + poly_to_json(det).dump() + ", not a unit");
    return c;
}

std::int64_t h1d_affine_witness(std::uint32_t p, std::int64_t d)
{
    if (d < 1) throw InvalidInput("witness degree must be at least 1");
    const Field k = Field::prime(p);
    const std::int64_t q = d / p;
    Matrix sub(k, static_cast<std::size_t>(d + 1), static_cast<std::size_t>(q + 1));
    for (std::int64_t j = 0; j <= q; ++j) sub(static_cast<std::size_t>(p * j), static_cast<std::size_t>(j)) = k.one();
    return d + 1 - static_cast<std::int64_t>(rank(sub));
}

json extracted_level_to_json(const ExtractedLevel& level)
{
    json invariants = json::array();
    for (const auto& f : level.smith_invariants) invariants.push_back(poly_to_json(f));
    json history = json::array();
    for (const auto& [d, rk] : level.rank_history) history.push_back({d, rk});
    return {{"level", level.n},
            {"generators", laurent_matrix_to_json(level.generators)},
            {"smith_invariants", invariants},
            {"spans_module", level.spans_module},
            {"certified", level.certified()},
            {"degree", level.degree},
            {"rank_history", history},
            {"twist", "a.s = a^(p^n) s"}};
}

} // namespace frobdiv
