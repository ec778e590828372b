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

#include "fdiv/p1/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fdiv/error.hpp"

namespace frobdiv {

namespace {

LaurentMatrix checked_transition(LaurentMatrix t)
{
    if (t.rows() == 0 || t.rows() != t.cols()) throw NotATransitionMatrix("transition matrix must be square and nonempty");
    const LaurentPoly det = determinant(t);
    if (!det.is_monomial())
        throw NotATransitionMatrix("det = " + poly_to_json(det).dump() + " is not a unit of k[x, 1/x]");
    return t;
}

// Exponent range of the entries, widened to contain 0.
std::int64_t window_start(const LaurentMatrix& t)
{
    const std::int64_t hi = std::max<std::int64_t>(t.max_exponent().value_or(0), 0);
    const std::int64_t lo = std::min<std::int64_t>(t.min_exponent().value_or(0), 0);
    return 1 + hi - lo;
}

// dim of {f in k[x]_{<=w}^r : T^{-1} f has no positive exponents}.
std::int64_t h0_window(const LaurentMatrix& t_inv, std::int64_t w)
{
    const Field& k = t_inv.field();
    const std::size_t r = t_inv.rows();
    const auto width = static_cast<std::size_t>(w + 1);
    const std::int64_t top = t_inv.max_exponent().value_or(0) + w;
    if (top <= 0) return static_cast<std::int64_t>(r * width);
    const auto height = static_cast<std::size_t>(top);
    Matrix system(k, r * height, r * width);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (const auto& [e, c] : t_inv(a, b).terms())
                for (std::int64_t j = 0; j <= w; ++j) {
                    const std::int64_t exp = e + j;
                    if (exp <= 0) continue;
                    system(a * height + static_cast<std::size_t>(exp - 1), b * width + static_cast<std::size_t>(j)) = c;
                }
    return static_cast<std::int64_t>(r * width - block_rank(system));
}

// dim of (x^{-1} k[x^{-1}])^r truncated to exponents [-w, -1], modulo the image of T k[x^{-1}]^r.
std::int64_t h1_window(const LaurentMatrix& t, std::int64_t w)
{
    const Field& k = t.field();
    const std::size_t r = t.rows();
    const auto height = static_cast<std::size_t>(w);
    const std::int64_t depth = w + t.max_exponent().value_or(0);
    if (depth < 0) return static_cast<std::int64_t>(r * height);
    const auto width = static_cast<std::size_t>(depth + 1);
    Matrix system(k, r * height, r * width);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (const auto& [e, c] : t(a, b).terms())
                for (std::int64_t j = 0; j <= depth; ++j) {
                    const std::int64_t exp = e - j;
                    if (exp >= 0 || exp < -w) continue;
                    system(a * height + static_cast<std::size_t>(-exp - 1), b * width + static_cast<std::size_t>(j)) = c;
                }
    return static_cast<std::int64_t>(r * height - block_rank(system));
}

} // namespace

BundleP1::BundleP1(LaurentMatrix t) : transition(checked_transition(std::move(t))) {}

BundleP1 split_bundle(const Field& k, const std::vector<std::int64_t>& exponents)
{
    return BundleP1(LaurentMatrix::diagonal_monomials(k, exponents));
}

std::int64_t degree(const BundleP1& e) { return *determinant(e.transition).min_exponent(); }

BundleP1 twist(const BundleP1& e, std::int64_t t)
{
    return BundleP1(e.transition.scaled(LaurentPoly::x_power(e.field(), t)));
}

BundleP1 frobenius_pullback(const BundleP1& e, std::uint32_t n) { return BundleP1(frobenius_pullback(e.transition, n)); }

std::int64_t cech_h(const BundleP1& e, int i, std::int64_t t, std::int64_t window_cap)
{
    if (i != 0 && i != 1) throw InvalidInput("cohomological degree must be 0 or 1 on the projective line");
    const LaurentMatrix tt = e.transition.scaled(LaurentPoly::x_power(e.field(), t));
    const LaurentMatrix inv = i == 0 ? laurent_matrix_inverse(tt) : tt;
    auto value = [&](std::int64_t w) { return i == 0 ? h0_window(inv, w) : h1_window(tt, w); };
    std::int64_t w = window_start(tt);
    std::int64_t prev = value(w);
    int agreements = 0;
    while (2 * w <= window_cap) {
        w *= 2;
        const std::int64_t cur = value(w);
        agreements = cur == prev ? agreements + 1 : 0;
        prev = cur;
        if (agreements == 2) return cur;
    }
    throw CohomologyDiverged("h^" + std::to_string(i) + "(E(" + std::to_string(t) +
                             ")) did not stabilize within window " + std::to_string(window_cap));
}

BirkhoffFactorization birkhoff_factor(const BundleP1& e, std::size_t step_cap)
{
    const Field& k = e.field();
    const std::size_t r = e.rank();
    LaurentMatrix w = e.transition;
    LaurentMatrix u = LaurentMatrix::identity(k, r);
    std::vector<std::int64_t> deg(r);
    std::size_t steps = 0;
    while (true) {
        Matrix lead(k, r, r);
        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t d = 0;
            bool any = false;
            for (std::size_t j = 0; j < r; ++j)
                if (!w(i, j).is_zero()) {
                    d = any ? std::max(d, *w(i, j).max_exponent()) : *w(i, j).max_exponent();
                    any = true;
                }
            deg[i] = d;
            for (std::size_t j = 0; j < r; ++j) lead(i, j) = w(i, j).coeff(d);
        }
        const Matrix relations = kernel_basis(lead.transpose());
        if (relations.cols() == 0) break;
        if (++steps > step_cap) throw FactorizationFailed("no row-reduced form after " + std::to_string(step_cap) + " steps");

        const std::vector<FieldElement> alpha = relations.column(0);
        std::size_t top = r;
        for (std::size_t i = 0; i < r; ++i)
            if (!k.is_zero(alpha[i]) && (top == r || deg[i] > deg[top])) top = i;
        const FieldElement norm = k.inv(alpha[top]);
        // row_top <- sum_i (alpha_i / alpha_top) x^{d_top - d_i} row_i; U absorbs the inverse column operation.
        for (std::size_t i = 0; i < r; ++i) {
            if (i == top || k.is_zero(alpha[i])) continue;
            const LaurentPoly f = LaurentPoly::monomial(k, k.mul(alpha[i], norm), deg[top] - deg[i]);
            for (std::size_t j = 0; j < r; ++j) {
                if (!w(i, j).is_zero()) w(top, j) += f * w(i, j);
                if (!u(j, top).is_zero()) u(j, i) -= u(j, top) * f;
            }
        }
    }

    // w = diag(x^deg) v; sort the exponents descending (stable, so ties keep row order).
    std::vector<std::size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    BirkhoffFactorization out{LaurentMatrix(k, r, r), LaurentMatrix(k, r, r), SplittingType(r), steps};
    for (std::size_t pos = 0; pos < r; ++pos) {
        const std::size_t src = order[pos];
        out.splitting[pos] = deg[src];
        for (std::size_t j = 0; j < r; ++j) {
            out.u(j, pos) = u(j, src);
            out.v(pos, j) = w(src, j).shifted(-deg[src]);
        }
    }
    return out;
}

SplittingType birkhoff_split(const BundleP1& e) { return birkhoff_factor(e).splitting; }

SplittingType splitting_from_h0(const BundleP1& e, std::int64_t window_cap)
{
    const std::int64_t r = static_cast<std::int64_t>(e.rank());
    std::int64_t reach = window_start(e.transition);
    while (reach <= window_cap) {
        // counts[t - lo] = h0(E(t)) - h0(E(t-1)) for t in [lo, hi].
        const std::int64_t lo = -reach;
        const std::int64_t hi = reach;
        std::vector<std::int64_t> h0;
        for (std::int64_t t = lo - 1; t <= hi; ++t) h0.push_back(cech_h(e, 0, t, window_cap));
        std::vector<std::int64_t> counts;
        for (std::size_t i = 1; i < h0.size(); ++i) counts.push_back(h0[i] - h0[i - 1]);
        if (counts.front() == 0 && counts.back() == r) {
            SplittingType split;
            std::int64_t prev = 0;
            for (std::int64_t t = lo; t <= hi; ++t) {
                const std::int64_t c = counts[static_cast<std::size_t>(t - lo)];
                if (c < prev) throw OracleDiverged("h0 differences are not monotone");
                for (std::int64_t m = prev; m < c; ++m) split.push_back(-t);
                prev = c;
            }
            return split;
        }
        reach *= 2;
    }
    throw OracleDiverged("h0 differences did not saturate within twist window " + std::to_string(window_cap));
}

std::int64_t euler_char(const BundleP1& e, std::int64_t t) { return cech_h(e, 0, t) - cech_h(e, 1, t); }

json bundle_to_json(const BundleP1& e)
{
    return {{"field", field_to_json(e.field())}, {"transition", laurent_matrix_to_json(e.transition)}};
}

BundleP1 bundle_from_json(const json& j, const Field& k)
{
    if (j.is_array()) return BundleP1(laurent_matrix_from_json(k, j));
    if (!j.is_object() || !j.contains("transition")) throw InvalidInput("bundle must be an object with \"transition\"");
    const Field field = j.contains("field") ? field_from_json(j.at("field")) : k;
    return BundleP1(laurent_matrix_from_json(field, j.at("transition")));
}

} // namespace frobdiv
